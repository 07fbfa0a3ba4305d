#include "polyalg/report.hpp"

#include "polyalg/errors.hpp"
#include "polyalg/rook.hpp"

#include <limits>

namespace polyalg {

namespace {

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::horizontal: return "horizontal";
    case Orientation::vertical: return "vertical";
    case Orientation::point: return "point";
  }
  return "point";
}

Json point_json(Point p) { return Json::array({p.x, p.y}); }

Json cells_json(std::span<const Cell> cells) {
  Json out = Json::array();
  for (const Cell& c : cells) out.push_back(Json::array({c.x, c.y}));
  return out;
}

Json values_json(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const HilbertSeries& s) { return Json{{"h", to_json(s.numerator)}, {"d", s.dimension}}; }

Json to_json(const Polyomino& p) { return cells_json(p.cells()); }

Json to_json(const CellInterval& interval) {
  return Json{{"orientation", orientation_name(interval.orientation)}, {"cells", cells_json(interval.cells)}};
}

Json to_json(const CollapseStep& step) {
  Json out;
  out["kind"] = step.kind == CollapseKind::tail ? "tail" : "endcut";
  out["interval"] = to_json(step.interval);
  out["crossing"] = to_json(step.crossing);
  out["pivot"] = Json::array({step.pivot.x, step.pivot.y});
  out["length"] = step.length();
  out["anchor"] = to_json(step.anchor);
  out["moved"] = step.moved ? to_json(*step.moved) : Json(nullptr);
  out["anchor_corners"] = Json::array({point_json(step.anchor_a), point_json(step.anchor_b)});
  out["moved_corners"] = Json::array({point_json(step.moved_a), point_json(step.moved_b)});
  out["translation"] = Json::array({step.translation.dx, step.translation.dy});
  return out;
}

Json to_json(const TheoremCheck& check) {
  Json out;
  out["mode"] = "theorem";
  out["depth"] = check.depth;
  out["verdict"] = check.match ? "match" : "mismatch";
  out["series"] = to_json(check.series);
  out["oracle_values"] = values_json(check.oracle_values);
  out["series_values"] = values_json(check.series_values);
  return out;
}

Json to_json(const ConjectureCheck& check) {
  Json out;
  out["mode"] = "conjecture";
  out["depth"] = check.depth;
  out["verdict"] = check.equal ? "equal" : "unequal";
  out["thin"] = check.thin;
  out["simple"] = check.simple;
  out["h"] = to_json(check.recovered.numerator);
  out["d"] = check.recovered.dimension;
  out["rook"] = to_json(check.rook);
  out["degree_equal"] = check.degree_equal;
  out["oracle_values"] = values_json(check.oracle_values);
  return out;
}

Json to_json(const ScanRecord& record) {
  Json out;
  out["cells"] = to_json(record.polyomino);
  out["rank"] = record.polyomino.rank();
  out["thin"] = record.thin;
  out["simple"] = record.simple;
  if (record.check) {
    out["rook"] = to_json(record.check->rook);
    out["h"] = to_json(record.check->recovered.numerator);
    out["d"] = record.check->recovered.dimension;
    out["depth"] = record.check->depth;
    out["equal"] = record.check->equal;
    out["degree_equal"] = record.check->degree_equal;
    out["skipped"] = nullptr;
  } else {
    out["rook"] = nullptr;
    out["h"] = nullptr;
    out["d"] = nullptr;
    out["depth"] = nullptr;
    out["equal"] = nullptr;
    out["degree_equal"] = nullptr;
    out["skipped"] = record.skip_reason.value_or("unknown");
  }
  return out;
}

Json to_json(const ScanSummary& s, const std::vector<ScanRecord>& records) {
  Json out;
  out["corpus_size"] = s.corpus_size;
  out["processed"] = s.processed;
  out["skipped"] = s.skipped;
  out["thin_equal"] = s.thin_equal;
  out["thin_unequal"] = s.thin_unequal;
  out["nonthin_equal"] = s.nonthin_equal;
  out["nonthin_unequal"] = s.nonthin_unequal;
  out["degree_mismatch"] = s.degree_mismatch;
  Json counterexamples = Json::array();
  for (std::size_t i : s.counterexamples) counterexamples.push_back(to_json(records.at(i)));
  out["counterexamples"] = std::move(counterexamples);
  Json unequal = Json::array();
  for (const auto& r : records)
    if (r.check && !r.check->equal) unequal.push_back(to_json(r.polyomino));
  out["unequal"] = std::move(unequal);
  return out;
}

Json classify_report(const Polyomino& p) {
  const bool connected = is_connected(p);
  const bool thin = is_thin(p);
  Json report;
  report["input"] = Json{{"cells", to_json(p)},
                         {"ascii", render_ascii(p)},
                         {"rank", p.rank()},
                         {"vertices", p.vertices().size()}};
  report["classification"] = Json{{"connected", connected},
                                  {"simple", connected ? Json(is_simple(p)) : Json(nullptr)},
                                  {"thin", thin},
                                  {"cell_interval", is_cell_interval(p)}};
  Json intervals = Json::array();
  for (const auto& interval : maximal_cell_intervals(p)) intervals.push_back(to_json(interval));
  report["maximal_intervals"] = std::move(intervals);
  Json warnings = Json::array();
  if (!connected) warnings.push_back("polyomino is not connected");
  if (!thin) warnings.push_back("not thin: maximal_intervals lists maximal straight runs only");
  report["warnings"] = std::move(warnings);
  for (const char* key : {"rook_polynomial", "rook_polynomial_recursive", "rook_number", "hilbert_series",
                          "hilbert_series_recursive", "regularity", "multiplicity", "a_invariant", "single_cells",
                          "s_property", "gorenstein", "collapse_step", "oracle"})
    report[key] = nullptr;
  return report;
}

Json invariants_report(const Polyomino& p) {
  if (!is_connected(p) || !is_simple(p) || !is_thin(p))
    throw PreconditionError(
        "invariants need a simple thin polyomino; for other polyominoes use `verify --mode conjecture`");
  Json report = classify_report(p);
  const IntPolynomial rook = rook_polynomial_bruteforce(p);
  const IntPolynomial rook_recursive = rook_polynomial_recursive(p);
  if (rook != rook_recursive)
    throw FalsificationError("rook polynomial routes disagree: brute force " + rook.to_string() + " vs recursion " +
                             rook_recursive.to_string());
  const HilbertSeries series = hilbert_series_thin(p);
  const HilbertSeries series_recursive = hilbert_series_recursive(p);
  if (series != series_recursive)
    throw FalsificationError("Hilbert series routes disagree: " + series.to_string() + " vs " +
                             series_recursive.to_string());
  report["rook_polynomial"] = to_json(rook);
  report["rook_polynomial_recursive"] = to_json(rook_recursive);
  report["rook_number"] = rook.degree();
  report["hilbert_series"] = to_json(series);
  report["hilbert_series_recursive"] = to_json(series_recursive);
  report["regularity"] = regularity(p);
  report["multiplicity"] = to_json(multiplicity(p));
  report["a_invariant"] = a_invariant(p);
  report["single_cells"] = cells_json(single_cells(p));
  report["s_property"] = has_s_property(p);
  report["gorenstein"] = is_gorenstein(p);
  report["collapse_step"] = is_cell_interval(p) ? Json(nullptr) : to_json(find_collapse(p));
  return report;
}

Json theorem_report(const Polyomino& p, const TheoremCheck& check) {
  Json report = classify_report(p);
  report["oracle"] = to_json(check);
  return report;
}

Json conjecture_report(const Polyomino& p, const ConjectureCheck& check) {
  Json report = classify_report(p);
  report["rook_polynomial"] = to_json(check.rook);
  report["rook_number"] = check.rook.degree();
  report["oracle"] = to_json(check);
  return report;
}

}  // namespace polyalg
