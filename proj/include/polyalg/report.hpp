#pragma once

// JSON reports shared by the CLI and the tests. Every report carries the same
// keys in the same order; analyses that were not run are null.

#include "polyalg/enumerate.hpp"
#include "polyalg/grid.hpp"
#include "polyalg/hilbert.hpp"
#include "polyalg/oracle.hpp"
#include "polyalg/polynomial.hpp"
#include "polyalg/structure.hpp"

#include "json.hpp"

namespace polyalg {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& n);                 // number, or decimal string past 64 bits
Json to_json(const IntPolynomial& p);          // ascending coefficients
Json to_json(const HilbertSeries& s);          // {"h": [...], "d": n}
Json to_json(const Polyomino& p);              // [[x, y], ...]
Json to_json(const CellInterval& interval);
Json to_json(const CollapseStep& step);
Json to_json(const TheoremCheck& check);
Json to_json(const ConjectureCheck& check);
Json to_json(const ScanRecord& record);
Json to_json(const ScanSummary& summary, const std::vector<ScanRecord>& records);

/// Report with input echo and classification; every analysis null.
Json classify_report(const Polyomino& p);

/// Full invariant report for a simple thin polyomino. Both rook routes and
/// both series routes are computed and cross-checked (FalsificationError on
/// disagreement). Throws PreconditionError on other input.
Json invariants_report(const Polyomino& p);

/// classify_report plus the oracle section.
Json theorem_report(const Polyomino& p, const TheoremCheck& check);
Json conjecture_report(const Polyomino& p, const ConjectureCheck& check);

}  // namespace polyalg
