#include "polyalg/enumerate.hpp"
#include "polyalg/errors.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace polyalg;
using namespace polyalg::testing;

namespace {

std::vector<std::size_t> counts_by_rank(const std::vector<Polyomino>& corpus, unsigned max_rank) {
  std::vector<std::size_t> counts(max_rank + 1, 0);
  for (const auto& p : corpus) ++counts[p.rank()];
  return counts;
}

}  // namespace

TEST(Enumerate, CountsMatchRedelmeier) {
  const auto corpus = enumerate_fixed(8);
  const auto expected = redelmeier_counts(8);
  const auto counts = counts_by_rank(corpus, 8);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(counts[n], expected[n]) << "rank " << n;
  EXPECT_EQ(std::vector<std::uint64_t>(expected.begin() + 1, expected.begin() + 8),
            (std::vector<std::uint64_t>{1, 2, 6, 19, 63, 216, 760}));
}

TEST(Enumerate, OrderedNormalizedDistinctConnected) {
  const auto corpus = enumerate_fixed(6);
  EXPECT_EQ(std::set<Polyomino>(corpus.begin(), corpus.end()).size(), corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(normalize(corpus[i]), corpus[i]);
    EXPECT_TRUE(is_connected(corpus[i]));
    if (i > 0) {
      const auto& a = corpus[i - 1];
      const auto& b = corpus[i];
      EXPECT_TRUE(a.rank() < b.rank() || (a.rank() == b.rank() && a < b));
    }
  }
}

TEST(Enumerate, Errors) {
  EXPECT_THROW(enumerate_fixed(0), PreconditionError);
  EXPECT_THROW(enumerate_fixed(11), ResourceError);
  EXPECT_EQ(enumerate_fixed(2, 2).size(), 3u);
}

TEST(Filter, ThinUpToFour) {
  const auto thin = filter_corpus(4, CorpusFilter{.thin = true});
  EXPECT_EQ(thin.size(), 27u);
  EXPECT_EQ(filter_corpus(4, CorpusFilter{.thin = false}), std::vector<Polyomino>{square()});
}

TEST(Filter, FirstNonSimpleAtRankSeven) {
  EXPECT_TRUE(filter_corpus(6, CorpusFilter{.simple = false}).empty());
  const auto holes = filter_corpus(7, CorpusFilter{.simple = false});
  EXPECT_FALSE(holes.empty());
  for (const auto& p : holes) EXPECT_EQ(p.rank(), 7u);
}

TEST(Filter, SimpleNonThinHaveABlock) {
  for (const auto& p : filter_corpus(7, CorpusFilter{.simple = true, .thin = false})) {
    bool block = false;
    for (const Cell& c : p.cells())
      block = block || (p.contains(Cell{c.x + 1, c.y}) && p.contains(Cell{c.x, c.y + 1}) &&
                        p.contains(Cell{c.x + 1, c.y + 1}));
    EXPECT_TRUE(block) << render_ascii(p);
  }
}

TEST(Filter, CellIntervals) {
  // One monomino and two orientations per longer rank.
  EXPECT_EQ(filter_corpus(6, CorpusFilter{.cell_interval = true}).size(), 11u);
}

TEST(Scan, RankTwo) {
  const auto report = conjecture_scan(2);
  EXPECT_EQ(report.summary.corpus_size, 3u);
  EXPECT_EQ(report.summary.processed, 3u);
  EXPECT_EQ(report.summary.thin_equal, 3u);
  EXPECT_TRUE(report.summary.counterexamples.empty());
}

TEST(Scan, RankFour) {
  const auto report = conjecture_scan(4);
  const auto& s = report.summary;
  EXPECT_EQ(s.corpus_size, 28u);
  EXPECT_EQ(s.skipped, 0u);
  EXPECT_EQ(s.processed + s.skipped, s.corpus_size);
  EXPECT_EQ(s.thin_equal + s.thin_unequal + s.nonthin_equal + s.nonthin_unequal, s.processed);
  EXPECT_EQ(s.thin_unequal, 0u);
  EXPECT_EQ(s.nonthin_unequal, 1u);
  EXPECT_EQ(s.degree_mismatch, 0u);
  EXPECT_TRUE(s.counterexamples.empty());
}

TEST(Scan, SkipsBeyondLimits) {
  ScanOptions options;
  options.limits = OracleLimits{.max_variables = 7, .max_degree = 12};
  const auto report = conjecture_scan(3, options);
  EXPECT_EQ(report.summary.processed, 3u);  // monomino and dominoes
  EXPECT_EQ(report.summary.skipped, 6u);  // every tromino has 8 vertices
  for (const auto& r : report.records)
    if (!r.check) EXPECT_TRUE(r.skip_reason && r.skip_reason->starts_with("resource"));
}

TEST(ScanProperty, ParallelMatchesSerial) {
  ScanOptions options;
  options.jobs = 4;
  const auto corpus = enumerate_fixed(5);
  const auto parallel = conjecture_scan(corpus, options);
  const auto reference = serial::conjecture_scan(corpus, options);
  ASSERT_EQ(parallel.records.size(), reference.records.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(parallel.records[i].polyomino, reference.records[i].polyomino);
    ASSERT_EQ(parallel.records[i].check.has_value(), reference.records[i].check.has_value());
    if (parallel.records[i].check) {
      EXPECT_EQ(parallel.records[i].check->recovered, reference.records[i].check->recovered);
      EXPECT_EQ(parallel.records[i].check->equal, reference.records[i].check->equal);
    }
  }
  EXPECT_EQ(parallel.summary.counterexamples, reference.summary.counterexamples);
}
