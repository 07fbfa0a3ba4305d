#pragma once

// Hilbert-Poincare series of K[P] for simple thin polyominoes, the invariants
// read off from it, and the Gorenstein test.

#include "polyalg/grid.hpp"
#include "polyalg/polynomial.hpp"
#include "polyalg/structure.hpp"

#include <functional>

namespace polyalg {

/// numerator(t) / (1 - t)^dimension, kept reduced: numerator(1) != 0 unless
/// dimension is already 0.
struct HilbertSeries {
  IntPolynomial numerator;
  unsigned dimension = 0;

  /// Cancels common (1 - t) factors.
  static HilbertSeries reduced(IntPolynomial numerator, unsigned dimension);

  bool operator==(const HilbertSeries&) const = default;
  std::string to_string() const;
};

/// |V(P)| - rank(P). Requires p simple.
unsigned krull_dimension(const Polyomino& p);

/// (1 + r t) / (1 - t)^(r + 2), the series of a cell interval of rank r.
HilbertSeries cell_interval_series(unsigned r);

/// Rook polynomial over (1 - t)^krull_dimension. Requires p simple and thin.
HilbertSeries hilbert_series_thin(const Polyomino& p);

struct HilbertRecursionStep {
  const Polyomino& polyomino;
  const CollapseStep& step;
  const HilbertSeries& result;
  const HilbertSeries& without_leaf;
  const HilbertSeries& collapsed;
};

using HilbertObserver = std::function<void(const HilbertRecursionStep&)>;

/// HP(P) = (HP(P') + t / (1 - t)^(r - 1) * HP(P'')) / (1 - t), where P' drops
/// the leaf of the collapsed interval and P'' is the collapse. Does not use
/// rook polynomials. Requires p simple and thin.
HilbertSeries hilbert_series_recursive(const Polyomino& p, TieBreak tie = TieBreak::first,
                                       const HilbertObserver& observer = {});

/// The alternating Betti-number numerator of a cell interval of rank r,
/// 1 + sum_{i=1}^{r-1} (-1)^i i C(r+1, i+1) t^(i+1) + (-1)^r r t^(r+1).
IntPolynomial betti_numerator(unsigned r);

/// betti_numerator(r) == (1 + r t)(1 - t)^r.
bool betti_numerator_identity(unsigned r);

int regularity(const Polyomino& p);
BigInt multiplicity(const Polyomino& p);
int a_invariant(const Polyomino& p);

/// Coefficient i equals coefficient deg - i for every i.
bool is_palindromic(const IntPolynomial& p);

/// S-property, cross-checked against palindromicity of the rook polynomial.
/// Throws FalsificationError if the two characterizations disagree.
bool is_gorenstein(const Polyomino& p);

}  // namespace polyalg
