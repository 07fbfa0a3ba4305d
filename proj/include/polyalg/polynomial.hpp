#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

namespace polyalg {

using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Index = degree. Always stored without trailing zeros, so the zero
/// polynomial has an empty coefficient list.
class IntPolynomial {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coefficients);
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(unsigned degree, const BigInt& c = 1);
  // (1 - t)^n
  static IntPolynomial one_minus_t_pow(unsigned n);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  // Coefficient of t^i, zero beyond the degree.
  BigInt operator[](std::size_t i) const;

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;

  BigInt evaluate(const BigInt& t) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  // Multiply by t^k.
  IntPolynomial shifted(unsigned k) const;

  // Exact division by (1 - t). Requires evaluate(1) == 0.
  IntPolynomial divided_by_one_minus_t() const;

  bool operator==(const IntPolynomial& o) const = default;

  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

}  // namespace polyalg
