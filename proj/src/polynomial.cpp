#include "polyalg/polynomial.hpp"

#include "polyalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace polyalg {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients)
    : coeffs_(coefficients.begin(), coefficients.end()) {
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) {
  return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::monomial(unsigned degree, const BigInt& c) {
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::one_minus_t_pow(unsigned n) {
  std::vector<BigInt> coeffs(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    coeffs[i] = binomial(n, i);
    if (i % 2 == 1) coeffs[i] = -coeffs[i];
  }
  return IntPolynomial(std::move(coeffs));
}

BigInt IntPolynomial::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

int IntPolynomial::degree() const {
  return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  r += o;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] - o[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(unsigned k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(k, BigInt(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divided_by_one_minus_t() const {
  if (evaluate(1) != 0)
    throw PreconditionError("polynomial " + to_string() + " is not divisible by (1 - t)");
  if (is_zero()) return {};
  // p = (1 - t) q  =>  q_i = sum_{j <= i} p_j
  std::vector<BigInt> q(coeffs_.size() - 1);
  BigInt running = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    running += coeffs_[i];
    q[i] = running;
  }
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace polyalg
