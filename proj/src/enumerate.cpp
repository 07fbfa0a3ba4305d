#include "polyalg/enumerate.hpp"

#include "polyalg/errors.hpp"
#include "polyalg/rook.hpp"

#include <algorithm>
#include <exception>
#include <set>

namespace polyalg {

std::vector<Polyomino> enumerate_fixed(unsigned max_rank, unsigned rank_limit) {
  if (max_rank < 1) throw PreconditionError("enumerate_fixed: max_rank must be at least 1");
  if (max_rank > rank_limit)
    throw ResourceError("enumerate_fixed: rank " + std::to_string(max_rank) + " exceeds the limit of " +
                        std::to_string(rank_limit));
  std::vector<Polyomino> out;
  std::vector<Polyomino> level{Polyomino({Cell{0, 0}})};
  for (unsigned rank = 1;; ++rank) {
    out.insert(out.end(), level.begin(), level.end());
    if (rank == max_rank) break;
    std::set<Polyomino> next;
    for (const Polyomino& p : level) {
      for (const Cell& c : p.cells()) {
        for (Shift s : {Shift{1, 0}, Shift{-1, 0}, Shift{0, 1}, Shift{0, -1}}) {
          const Cell grown = c + s;
          if (p.contains(grown)) continue;
          std::vector<Cell> cells(p.cells().begin(), p.cells().end());
          cells.push_back(grown);
          next.insert(normalize(Polyomino(std::move(cells))));
        }
      }
    }
    level.assign(next.begin(), next.end());
  }
  return out;
}

bool CorpusFilter::accepts(const Polyomino& p) const {
  if (simple && is_simple(p) != *simple) return false;
  if (thin && is_thin(p) != *thin) return false;
  if (cell_interval && is_cell_interval(p) != *cell_interval) return false;
  return true;
}

std::vector<Polyomino> filter_corpus(unsigned max_rank, const CorpusFilter& filter, unsigned rank_limit) {
  std::vector<Polyomino> out;
  for (auto& p : enumerate_fixed(max_rank, rank_limit))
    if (filter.accepts(p)) out.push_back(std::move(p));
  return out;
}

namespace {

ScanRecord scan_one(const Polyomino& p, const ScanOptions& options) {
  ScanRecord record{p, is_thin(p), is_simple(p), std::nullopt, std::nullopt};
  try {
    const unsigned depth = static_cast<unsigned>(rook_number(p)) + options.depth_margin;
    record.check = verify_conjecture(p, depth, options.limits);
  } catch (const ResourceError& e) {
    record.skip_reason = std::string("resource: ") + e.what();
  } catch (const InsufficientDepthError& e) {
    record.skip_reason = std::string("depth: ") + e.what();
  }
  return record;
}

}  // namespace

ScanSummary summarize(const std::vector<ScanRecord>& records) {
  ScanSummary s;
  s.corpus_size = records.size();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ScanRecord& r = records[i];
    if (!r.check) {
      ++s.skipped;
      continue;
    }
    ++s.processed;
    const bool equal = r.check->equal;
    bool counterexample = false;
    if (r.thin) {
      ++(equal ? s.thin_equal : s.thin_unequal);
      counterexample = !equal;
    } else {
      ++(equal ? s.nonthin_equal : s.nonthin_unequal);
      counterexample = equal;
    }
    if (!r.check->degree_equal) {
      ++s.degree_mismatch;
      counterexample = true;
    }
    if (counterexample) s.counterexamples.push_back(i);
  }
  return s;
}

ScanReport serial::conjecture_scan(const std::vector<Polyomino>& corpus, const ScanOptions& options) {
  ScanReport report;
  report.records.reserve(corpus.size());
  for (const Polyomino& p : corpus) report.records.push_back(scan_one(p, options));
  report.summary = summarize(report.records);
  return report;
}

ScanReport conjecture_scan(const std::vector<Polyomino>& corpus, const ScanOptions& options) {
  std::vector<std::optional<ScanRecord>> slots(corpus.size());
  std::vector<std::exception_ptr> failures(corpus.size());
  const int jobs = static_cast<int>(std::max(1u, options.jobs));
  const long n = static_cast<long>(corpus.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long i = 0; i < n; ++i) {
    try {
      slots[i] = scan_one(corpus[i], options);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);
  ScanReport report;
  report.records.reserve(corpus.size());
  for (auto& slot : slots) report.records.push_back(std::move(*slot));
  report.summary = summarize(report.records);
  return report;
}

ScanReport conjecture_scan(unsigned max_rank, const ScanOptions& options) {
  return conjecture_scan(enumerate_fixed(max_rank, options.rank_limit), options);
}

}  // namespace polyalg
