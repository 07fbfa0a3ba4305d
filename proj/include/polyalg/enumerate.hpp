#pragma once

// Fixed polyominoes (up to translation) by rank, corpus filters, and the
// conjecture scan that runs the oracle over a whole corpus.

#include "polyalg/grid.hpp"
#include "polyalg/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyalg {

/// Ranks above this are refused unless the caller raises it.
inline constexpr unsigned kDefaultMaxEnumerationRank = 10;

/// Every fixed polyomino of rank 1..max_rank exactly once, normalized, ordered
/// by rank and then lexicographically by cell list. Grown cell by cell from
/// the monomino with translation-canonical deduplication.
std::vector<Polyomino> enumerate_fixed(unsigned max_rank, unsigned rank_limit = kDefaultMaxEnumerationRank);

/// Each set field must match the corresponding predicate.
struct CorpusFilter {
  std::optional<bool> simple;
  std::optional<bool> thin;
  std::optional<bool> cell_interval;

  bool accepts(const Polyomino& p) const;
};

std::vector<Polyomino> filter_corpus(unsigned max_rank, const CorpusFilter& filter,
                                     unsigned rank_limit = kDefaultMaxEnumerationRank);

struct ScanRecord {
  Polyomino polyomino;
  bool thin = false;
  bool simple = false;
  std::optional<ConjectureCheck> check;  // absent when skipped
  std::optional<std::string> skip_reason;
};

struct ScanSummary {
  std::size_t corpus_size = 0;
  std::size_t processed = 0;
  std::size_t skipped = 0;
  std::size_t thin_equal = 0;
  std::size_t thin_unequal = 0;     // counterexamples to "thin => equal"
  std::size_t nonthin_equal = 0;    // counterexamples to "not thin => unequal"
  std::size_t nonthin_unequal = 0;
  std::size_t degree_mismatch = 0;  // counterexamples to "deg h = rook number"
  std::vector<std::size_t> counterexamples;  // record indices, any of the three kinds
};

struct ScanReport {
  std::vector<ScanRecord> records;  // corpus order
  ScanSummary summary;
};

struct ScanOptions {
  unsigned depth_margin = 3;  // oracle depth = rook number + depth_margin
  unsigned jobs = 1;
  unsigned rank_limit = kDefaultMaxEnumerationRank;
  OracleLimits limits = OracleLimits::from_environment();
};

/// verify_conjecture over every fixed polyomino of rank <= max_rank. Resource
/// and depth failures become skipped records. OpenMP-parallel over
/// polyominoes; records keep corpus order regardless of jobs.
ScanReport conjecture_scan(unsigned max_rank, const ScanOptions& options = {});
ScanReport conjecture_scan(const std::vector<Polyomino>& corpus, const ScanOptions& options = {});

/// Tallies records into a summary.
ScanSummary summarize(const std::vector<ScanRecord>& records);

namespace serial {
/// Reference implementation: one polyomino after the other.
ScanReport conjecture_scan(const std::vector<Polyomino>& corpus, const ScanOptions& options = {});
}  // namespace serial

}  // namespace polyalg
