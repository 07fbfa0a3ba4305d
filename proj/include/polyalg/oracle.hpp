#pragma once

// Independent route to the Hilbert function of K[P]: build the inner 2-minors,
// complete them to a Groebner basis and count standard monomials degree by
// degree. Nothing here uses rook polynomials, so comparing its output with
// the rook-based series checks the main identity h(t) = r_P(t).

#include "polyalg/grid.hpp"
#include "polyalg/groebner.hpp"
#include "polyalg/hilbert.hpp"
#include "polyalg/polynomial.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace polyalg {

/// Guards for the oracle. Overridable with POLYALG_MAX_VARS and
/// POLYALG_MAX_DEGREE.
struct OracleLimits {
  std::size_t max_variables = 30;
  unsigned max_degree = 12;

  static OracleLimits from_environment();
};

/// degrevlex with the vertices of p ranked lexicographically by coordinates,
/// the smallest vertex being the largest variable. Variable i is
/// p.vertices()[i].
TermOrder default_term_order(const Polyomino& p);

/// x_a x_b - x_c x_d for every inner interval [a, b] of p, oriented by order.
std::vector<Binomial> inner_2_minors(const Polyomino& p, const TermOrder& order);
std::vector<Binomial> inner_2_minors(const Polyomino& p);

/// Number of monomials of each degree 0..up_to divisible by none of leads.
/// OpenMP kernel: each degree level is extended in parallel chunks.
std::vector<std::uint64_t> count_standard_monomials(std::span<const Monomial> leads, std::size_t variables,
                                                    unsigned up_to);

namespace serial {
/// Reference implementation of count_standard_monomials.
std::vector<std::uint64_t> count_standard_monomials(std::span<const Monomial> leads, std::size_t variables,
                                                    unsigned up_to);
}  // namespace serial

/// H(0..up_to) of K[P] from a Groebner basis truncated at degree up_to + 1.
/// Throws ResourceError beyond the limits.
std::vector<BigInt> hilbert_function_oracle(const Polyomino& p, unsigned up_to,
                                            const OracleLimits& limits = OracleLimits::from_environment(),
                                            const std::optional<TermOrder>& order = std::nullopt);

/// H(k) = sum_i h_i C(d - 1 + k - i, d - 1) for k = 0..up_to.
std::vector<BigInt> series_expansion(const HilbertSeries& series, unsigned up_to);

/// Inverse of series_expansion: multiplies the prefix by (1 - t) until its last
/// two entries vanish, trying at most max_dimension + 1 times. The Krull
/// dimension never exceeds the number of variables, which is the bound the
/// oracle passes. Throws InsufficientDepthError if the prefix never settles,
/// i.e. it is shorter than deg h + 2.
HilbertSeries h_from_differences(std::span<const BigInt> values, unsigned max_dimension = 64);

struct TheoremCheck {
  bool match = false;
  unsigned depth = 0;
  HilbertSeries series;                // from the rook polynomial
  std::vector<BigInt> oracle_values;   // standard-monomial counts
  std::vector<BigInt> series_values;   // expansion of series
};

/// Compares the oracle Hilbert function with the rook-based series up to
/// depth. Requires p simple and thin and depth >= rook_number + 2.
TheoremCheck verify_main_theorem(const Polyomino& p, unsigned depth,
                                 const OracleLimits& limits = OracleLimits::from_environment());

struct ConjectureCheck {
  bool equal = false;         // recovered h == rook polynomial
  bool degree_equal = false;  // deg h == rook number
  bool thin = false;
  bool simple = false;
  unsigned depth = 0;
  HilbertSeries recovered;    // h and d from the oracle alone
  IntPolynomial rook;
  std::vector<BigInt> oracle_values;
};

/// Recovers h(t) from the oracle and compares it with the brute-force rook
/// polynomial. Works for any connected polyomino within the limits.
ConjectureCheck verify_conjecture(const Polyomino& p, unsigned depth,
                                  const OracleLimits& limits = OracleLimits::from_environment());

/// "x(i,j)*x(k,l) - x(p,q)*x(r,s)", variables named by vertex coordinates.
std::string format_binomial(const Binomial& b, std::span<const Point> vertices);

/// Plain-text dump of the generators and of the (truncated) Groebner basis,
/// one binomial per line, for cross-checking in other systems.
void write_ideal_dump(std::ostream& out, const Polyomino& p, unsigned up_to,
                      const OracleLimits& limits = OracleLimits::from_environment());

}  // namespace polyalg
