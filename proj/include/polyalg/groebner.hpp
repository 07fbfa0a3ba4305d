#pragma once

// Pure-difference binomial ideals: monomials over indexed variables, the
// degree reverse lexicographic order, and Buchberger completion. A pure
// binomial u - v stays pure under S-pairs and reduction, so the whole
// computation is carried out on monomial pairs without coefficients.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace polyalg {

/// Monomial in a fixed number of variables, stored as a dense exponent
/// vector.
class Monomial {
 public:
  explicit Monomial(std::size_t variables = 0) : exponents_(variables, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exponents);
  static Monomial variable(std::size_t variables, std::size_t index);

  std::size_t variables() const { return exponents_.size(); }
  unsigned degree() const { return degree_; }
  std::uint16_t operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<std::uint16_t>& exponents() const { return exponents_; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // this / divisor; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  bool operator==(const Monomial& o) const { return exponents_ == o.exponents_; }
  // Plain lexicographic comparison of exponent vectors, for containers only.
  auto operator<=>(const Monomial& o) const { return exponents_ <=> o.exponents_; }

 private:
  std::vector<std::uint16_t> exponents_;
  unsigned degree_ = 0;
};

/// Degree reverse lexicographic order. ranking[0] is the largest variable.
class TermOrder {
 public:
  static TermOrder degrevlex(std::size_t variables);
  static TermOrder degrevlex(std::vector<std::size_t> ranking);

  std::size_t variables() const { return ranking_.size(); }
  const std::vector<std::size_t>& ranking() const { return ranking_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  explicit TermOrder(std::vector<std::size_t> ranking) : ranking_(std::move(ranking)) {}
  std::vector<std::size_t> ranking_;
};

/// lead - trail with lead > trail in the active order.
struct Binomial {
  Monomial lead;
  Monomial trail;

  /// Orients a - b; nullopt when a == b.
  static std::optional<Binomial> oriented(Monomial a, Monomial b, const TermOrder& order);

  bool operator==(const Binomial&) const = default;
};

struct GroebnerLimits {
  std::size_t max_pairs = 20'000'000;
  std::size_t max_elements = 200'000;
};

struct GroebnerBasis {
  std::vector<Binomial> elements;  // reduced, sorted by decreasing lead
  std::optional<unsigned> degree_cap;
  std::size_t deferred_pairs = 0;  // S-pairs above the cap, never processed
  std::size_t processed_pairs = 0;

  /// True when no pair was deferred: the basis is a full Groebner basis.
  bool complete() const { return deferred_pairs == 0; }
  std::vector<Monomial> leading_monomials() const;
};

/// Buchberger completion of homogeneous pure binomials. With a degree cap,
/// S-pairs whose lcm has degree above the cap are deferred and the result is
/// a truncated basis: correct for every leading term of degree <= cap.
/// Throws ResourceError when a limit is hit.
GroebnerBasis buchberger(std::span<const Binomial> generators, const TermOrder& order,
                         std::optional<unsigned> degree_cap = std::nullopt, const GroebnerLimits& limits = {});

/// Drops every monomial divisible by another one in the list.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

}  // namespace polyalg
