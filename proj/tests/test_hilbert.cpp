#include "polyalg/enumerate.hpp"
#include "polyalg/errors.hpp"
#include "polyalg/hilbert.hpp"
#include "polyalg/rook.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace polyalg;
using namespace polyalg::testing;

TEST(Hilbert, KrullDimension) {
  EXPECT_EQ(krull_dimension(seven_cell()), 9u);
  EXPECT_EQ(krull_dimension(stair()), 7u);
  EXPECT_EQ(krull_dimension(square()), 5u);
  EXPECT_EQ(krull_dimension(make({{0, 0}})), 3u);
  EXPECT_THROW(krull_dimension(ring()), PreconditionError);
}

TEST(Hilbert, CellInterval) {
  for (unsigned r = 1; r <= 12; ++r) {
    const auto s = cell_interval_series(r);
    EXPECT_EQ(s.numerator, (IntPolynomial{1, static_cast<long>(r)}));
    EXPECT_EQ(s.dimension, r + 2);
    EXPECT_EQ(hilbert_series_thin(row(static_cast<int>(r))), s);
    EXPECT_EQ(hilbert_series_recursive(column(static_cast<int>(r))), s);
  }
  EXPECT_THROW(cell_interval_series(0), PreconditionError);
}

TEST(Hilbert, Fixtures) {
  EXPECT_EQ(hilbert_series_thin(seven_cell()), (HilbertSeries{IntPolynomial{1, 7, 13, 7, 1}, 9}));
  EXPECT_EQ(hilbert_series_recursive(seven_cell()), (HilbertSeries{IntPolynomial{1, 7, 13, 7, 1}, 9}));
  EXPECT_EQ(hilbert_series_recursive(stair()), (HilbertSeries{IntPolynomial{1, 5, 6, 1}, 7}));
  EXPECT_EQ(hilbert_series_recursive(skew()), (HilbertSeries{IntPolynomial{1, 4, 3}, 6}));
  EXPECT_EQ(hilbert_series_thin(skew()).to_string(), "(1 + 4t + 3t^2)/(1 - t)^6");
  EXPECT_THROW(hilbert_series_thin(square()), PreconditionError);
  EXPECT_THROW(hilbert_series_recursive(square()), PreconditionError);
}

TEST(Hilbert, Reduced) {
  const auto s = HilbertSeries::reduced(IntPolynomial{1, 4, 3} * IntPolynomial::one_minus_t_pow(2), 8);
  EXPECT_EQ(s, (HilbertSeries{IntPolynomial{1, 4, 3}, 6}));
}

TEST(Hilbert, Invariants) {
  EXPECT_EQ(regularity(seven_cell()), 4);
  EXPECT_EQ(multiplicity(seven_cell()), 29);
  EXPECT_EQ(a_invariant(seven_cell()), -5);
  EXPECT_EQ(regularity(skew()), 2);
  EXPECT_EQ(regularity(make({{0, 0}})), 1);
  EXPECT_EQ(multiplicity(make({{0, 0}})), 2);
  EXPECT_EQ(a_invariant(make({{0, 0}})), -2);
  for (int r = 1; r <= 8; ++r) {
    EXPECT_EQ(multiplicity(row(r)), r + 1);
    EXPECT_EQ(a_invariant(row(r)), -r - 1);
  }
}

TEST(Hilbert, Palindromic) {
  EXPECT_TRUE(is_palindromic(IntPolynomial{1, 7, 13, 7, 1}));
  EXPECT_FALSE(is_palindromic(IntPolynomial{1, 5, 6, 1}));
  EXPECT_TRUE(is_palindromic(IntPolynomial{1}));
  EXPECT_TRUE(is_palindromic(IntPolynomial{1, 1}));
}

TEST(Hilbert, Gorenstein) {
  EXPECT_TRUE(is_gorenstein(seven_cell()));
  EXPECT_FALSE(is_gorenstein(stair()));
  EXPECT_TRUE(is_gorenstein(make({{0, 0}})));
  for (int r = 2; r <= 6; ++r) EXPECT_FALSE(is_gorenstein(row(r)));
}

TEST(Betti, Numerator) {
  // r = 2: 1 - 3t^2 + 2t^3 = (1 + 2t)(1 - t)^2.
  EXPECT_EQ(betti_numerator(2), (IntPolynomial{1, 0, -3, 2}));
  EXPECT_EQ(betti_numerator(2), (IntPolynomial{1, 2} * IntPolynomial::one_minus_t_pow(2)));
  EXPECT_EQ(betti_numerator(6), (IntPolynomial{1, 6} * IntPolynomial::one_minus_t_pow(6)));
  for (unsigned r = 1; r <= 50; ++r) EXPECT_TRUE(betti_numerator_identity(r)) << r;
}

TEST(HilbertProperty, RecursionMatchesRookSeriesOnCorpus) {
  for (const auto& p : filter_corpus(7, CorpusFilter{.simple = true, .thin = true})) {
    const auto thin = hilbert_series_thin(p);
    EXPECT_EQ(thin.dimension, p.vertices().size() - p.rank());
    EXPECT_EQ(hilbert_series_recursive(p, TieBreak::first), thin) << render_ascii(p);
    EXPECT_EQ(hilbert_series_recursive(p, TieBreak::last), thin) << render_ascii(p);
    EXPECT_EQ(has_s_property(p), is_palindromic(rook_polynomial_bruteforce(p))) << render_ascii(p);
  }
}

TEST(HilbertProperty, ObserverDimensions) {
  hilbert_series_recursive(seven_cell(), TieBreak::first, [](const HilbertRecursionStep& s) {
    EXPECT_EQ(s.without_leaf.dimension + 1, s.result.dimension);
    EXPECT_EQ(s.collapsed.dimension + s.step.length(), s.result.dimension);
  });
}
