#include "polyalg/hilbert.hpp"

#include "polyalg/errors.hpp"
#include "polyalg/rook.hpp"

#include <algorithm>

namespace polyalg {

namespace {

void require_simple(const Polyomino& p, const char* what) {
  if (!is_connected(p) || !is_simple(p)) throw PreconditionError(std::string(what) + ": polyomino is not simple");
}

void require_simple_thin(const Polyomino& p, const char* what) {
  require_simple(p, what);
  if (!is_thin(p)) throw PreconditionError(std::string(what) + ": polyomino is not thin");
}

// Expresses a / (1-t)^da as a fraction over (1-t)^target.
IntPolynomial lift(const IntPolynomial& a, unsigned da, unsigned target) {
  return a * IntPolynomial::one_minus_t_pow(target - da);
}

HilbertSeries recurse(const Polyomino& p, TieBreak tie, const HilbertObserver& observer) {
  if (is_cell_interval(p)) return cell_interval_series(static_cast<unsigned>(p.rank()));
  const CollapseStep step = find_collapse(p, tie);
  const Leaf leaf = interval_leaf(p, step, tie);
  const HilbertSeries without_leaf = recurse(remove_leaf(p, leaf), tie, observer);
  const HilbertSeries collapsed = recurse(collapse(p, step), tie, observer);

  // (1/(1-t)) * ( N1/(1-t)^d1 + t N2/(1-t)^(d2 + r - 1) )
  const auto r = static_cast<unsigned>(step.length());
  const unsigned first = without_leaf.dimension + 1;
  const unsigned second = collapsed.dimension + r;
  const unsigned common = std::max(first, second);
  IntPolynomial numerator = lift(without_leaf.numerator, first, common) +
                            lift(collapsed.numerator.shifted(1), second, common);
  HilbertSeries result = HilbertSeries::reduced(std::move(numerator), common);
  if (observer) observer({p, step, result, without_leaf, collapsed});
  return result;
}

}  // namespace

HilbertSeries HilbertSeries::reduced(IntPolynomial numerator, unsigned dimension) {
  while (dimension > 0 && !numerator.is_zero() && numerator.evaluate(1) == 0) {
    numerator = numerator.divided_by_one_minus_t();
    --dimension;
  }
  return {std::move(numerator), dimension};
}

std::string HilbertSeries::to_string() const {
  return "(" + numerator.to_string() + ")/(1 - t)^" + std::to_string(dimension);
}

unsigned krull_dimension(const Polyomino& p) {
  require_simple(p, "krull_dimension");
  return static_cast<unsigned>(p.vertices().size() - p.rank());
}

HilbertSeries cell_interval_series(unsigned r) {
  if (r < 1) throw PreconditionError("cell_interval_series: rank must be positive");
  return {IntPolynomial{1, static_cast<long>(r)}, r + 2};
}

HilbertSeries hilbert_series_thin(const Polyomino& p) {
  require_simple_thin(p, "hilbert_series_thin");
  return {rook_polynomial_bruteforce(p), krull_dimension(p)};
}

HilbertSeries hilbert_series_recursive(const Polyomino& p, TieBreak tie, const HilbertObserver& observer) {
  require_simple_thin(p, "hilbert_series_recursive");
  return recurse(normalize(p), tie, observer);
}

IntPolynomial betti_numerator(unsigned r) {
  if (r < 1) throw PreconditionError("betti_numerator: rank must be positive");
  IntPolynomial numerator{1};
  for (unsigned i = 1; i + 1 <= r; ++i) {
    BigInt c = BigInt(i) * binomial(r + 1, i + 1);
    if (i % 2 == 1) c = -c;
    numerator += IntPolynomial::monomial(i + 1, c);
  }
  BigInt last = r % 2 == 1 ? BigInt(-static_cast<long>(r)) : BigInt(r);
  numerator += IntPolynomial::monomial(r + 1, last);
  return numerator;
}

bool betti_numerator_identity(unsigned r) {
  return betti_numerator(r) == IntPolynomial{1, static_cast<long>(r)} * IntPolynomial::one_minus_t_pow(r);
}

int regularity(const Polyomino& p) {
  require_simple_thin(p, "regularity");
  return rook_number(p);
}

BigInt multiplicity(const Polyomino& p) {
  require_simple_thin(p, "multiplicity");
  return rook_polynomial_bruteforce(p).evaluate(1);
}

int a_invariant(const Polyomino& p) {
  require_simple_thin(p, "a_invariant");
  return rook_number(p) - static_cast<int>(krull_dimension(p));
}

bool is_palindromic(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

bool is_gorenstein(const Polyomino& p) {
  require_simple_thin(p, "is_gorenstein");
  const bool s_property = has_s_property(p);
  const bool palindromic = is_palindromic(rook_polynomial_bruteforce(p));
  if (s_property != palindromic)
    throw FalsificationError("Gorenstein characterizations disagree: S-property is " +
                             std::string(s_property ? "true" : "false") + " but the rook polynomial is " +
                             (palindromic ? "" : "not ") + "palindromic");
  return s_property;
}

}  // namespace polyalg
