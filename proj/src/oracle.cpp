#include "polyalg/oracle.hpp"

#include "polyalg/errors.hpp"
#include "polyalg/rook.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>

namespace polyalg {

namespace {

std::size_t vertex_index(std::span<const Point> vertices, Point v) {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) throw std::logic_error("point is not a vertex of the polyomino");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::optional<unsigned long> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  unsigned long value = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0') throw PreconditionError(std::string(name) + " is not a non-negative integer");
  return value;
}

// A leading monomial as (variable, exponent) factors.
struct SparseMonomial {
  std::vector<std::pair<std::uint16_t, std::uint16_t>> factors;
  unsigned degree = 0;
};

// Standard monomials of one degree, stored densely, plus for each the index
// of its last variable; a monomial is only extended by variables at or after
// that index so every monomial is produced exactly once.
struct Level {
  std::size_t variables = 0;
  std::vector<std::uint8_t> exponents;
  std::vector<std::uint16_t> last;

  std::size_t size() const { return last.size(); }
  const std::uint8_t* row(std::size_t i) const { return exponents.data() + i * variables; }
};

class StandardMonomialCounter {
 public:
  StandardMonomialCounter(std::span<const Monomial> leads, std::size_t variables, unsigned up_to)
      : variables_(variables), by_variable_(variables) {
    if (up_to > 255) throw ResourceError("standard monomial counting is limited to degree 255");
    std::vector<Monomial> minimal = minimalize(std::vector<Monomial>(leads.begin(), leads.end()));
    for (const Monomial& m : minimal) {
      if (m.variables() != variables) throw PreconditionError("leading monomial has the wrong number of variables");
      if (m.degree() == 0) constant_lead_ = true;
      SparseMonomial s;
      s.degree = m.degree();
      for (std::size_t v = 0; v < variables; ++v)
        if (m[v] != 0) s.factors.emplace_back(static_cast<std::uint16_t>(v), m[v]);
      sparse_.push_back(std::move(s));
    }
    for (std::size_t k = 0; k < sparse_.size(); ++k)
      for (const auto& [v, e] : sparse_[k].factors) by_variable_[v].push_back(k);
  }

  bool constant_lead() const { return constant_lead_; }

  Level start() const {
    Level level;
    level.variables = variables_;
    level.exponents.assign(variables_, 0);
    level.last.push_back(0);
    return level;
  }

  // Appends every standard extension of monomials [begin, end) of from.
  void extend(const Level& from, std::size_t begin, std::size_t end, unsigned degree, Level& to) const {
    std::vector<std::uint8_t> candidate(variables_);
    for (std::size_t m = begin; m < end; ++m) {
      const std::uint8_t* base = from.row(m);
      for (std::size_t v = from.last[m]; v < variables_; ++v) {
        std::copy(base, base + variables_, candidate.begin());
        ++candidate[v];
        if (divisible(candidate, v, degree)) continue;
        to.exponents.insert(to.exponents.end(), candidate.begin(), candidate.end());
        to.last.push_back(static_cast<std::uint16_t>(v));
      }
    }
  }

 private:
  // Only leads involving the new variable can divide the extension of a
  // standard monomial.
  bool divisible(const std::vector<std::uint8_t>& candidate, std::size_t v, unsigned degree) const {
    for (std::size_t k : by_variable_[v]) {
      const SparseMonomial& lead = sparse_[k];
      if (lead.degree > degree) continue;
      bool divides = true;
      for (const auto& [var, e] : lead.factors) {
        if (candidate[var] < e) {
          divides = false;
          break;
        }
      }
      if (divides) return true;
    }
    return false;
  }

  std::size_t variables_;
  std::vector<SparseMonomial> sparse_;
  std::vector<std::vector<std::size_t>> by_variable_;
  bool constant_lead_ = false;
};

std::vector<BigInt> to_big(const std::vector<std::uint64_t>& values) {
  return {values.begin(), values.end()};
}

}  // namespace

OracleLimits OracleLimits::from_environment() {
  OracleLimits limits;
  if (auto v = env_number("POLYALG_MAX_VARS")) limits.max_variables = *v;
  if (auto v = env_number("POLYALG_MAX_DEGREE")) limits.max_degree = static_cast<unsigned>(*v);
  return limits;
}

TermOrder default_term_order(const Polyomino& p) { return TermOrder::degrevlex(p.vertices().size()); }

std::vector<Binomial> inner_2_minors(const Polyomino& p, const TermOrder& order) {
  const auto& vertices = p.vertices();
  const std::size_t n = vertices.size();
  if (order.variables() != n) throw PreconditionError("term order does not match the vertex count");
  auto product = [&](Point u, Point v) {
    return Monomial::variable(n, vertex_index(vertices, u)) * Monomial::variable(n, vertex_index(vertices, v));
  };
  std::vector<Binomial> out;
  for (const VertexInterval& interval : inner_intervals(p)) {
    auto b = Binomial::oriented(product(interval.lower, interval.upper),
                                product(interval.upper_left(), interval.lower_right()), order);
    if (!b) throw std::logic_error("inner 2-minor with equal terms");
    if (std::find(out.begin(), out.end(), *b) == out.end()) out.push_back(std::move(*b));
  }
  return out;
}

std::vector<Binomial> inner_2_minors(const Polyomino& p) { return inner_2_minors(p, default_term_order(p)); }

std::vector<std::uint64_t> serial::count_standard_monomials(std::span<const Monomial> leads, std::size_t variables,
                                                            unsigned up_to) {
  StandardMonomialCounter counter(leads, variables, up_to);
  std::vector<std::uint64_t> counts(up_to + 1, 0);
  if (counter.constant_lead()) return counts;
  Level level = counter.start();
  counts[0] = 1;
  for (unsigned k = 1; k <= up_to; ++k) {
    Level next;
    next.variables = variables;
    counter.extend(level, 0, level.size(), k, next);
    counts[k] = next.size();
    level = std::move(next);
  }
  return counts;
}

std::vector<std::uint64_t> count_standard_monomials(std::span<const Monomial> leads, std::size_t variables,
                                                    unsigned up_to) {
  StandardMonomialCounter counter(leads, variables, up_to);
  std::vector<std::uint64_t> counts(up_to + 1, 0);
  if (counter.constant_lead()) return counts;
  Level level = counter.start();
  counts[0] = 1;
  constexpr std::size_t kChunk = 512;
  for (unsigned k = 1; k <= up_to; ++k) {
    const std::size_t chunks = (level.size() + kChunk - 1) / kChunk;
    std::vector<Level> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (long c = 0; c < static_cast<long>(chunks); ++c) {
      parts[c].variables = variables;
      const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
      counter.extend(level, begin, std::min(level.size(), begin + kChunk), k, parts[c]);
    }
    // Concatenate in chunk order so the next level is laid out exactly as
    // the serial kernel would produce it.
    Level next;
    next.variables = variables;
    for (Level& part : parts) {
      next.exponents.insert(next.exponents.end(), part.exponents.begin(), part.exponents.end());
      next.last.insert(next.last.end(), part.last.begin(), part.last.end());
    }
    counts[k] = next.size();
    level = std::move(next);
  }
  return counts;
}

std::vector<BigInt> hilbert_function_oracle(const Polyomino& p, unsigned up_to, const OracleLimits& limits,
                                            const std::optional<TermOrder>& order) {
  const std::size_t n = p.vertices().size();
  if (n > limits.max_variables)
    throw ResourceError("oracle: " + std::to_string(n) + " variables exceed the limit of " +
                        std::to_string(limits.max_variables));
  if (up_to > limits.max_degree)
    throw ResourceError("oracle: degree " + std::to_string(up_to) + " exceeds the limit of " +
                        std::to_string(limits.max_degree));
  const TermOrder active = order ? *order : default_term_order(p);
  const auto generators = inner_2_minors(p, active);
  const auto basis = buchberger(generators, active, up_to + 1);
  const auto leads = basis.leading_monomials();
  return to_big(count_standard_monomials(leads, n, up_to));
}

std::vector<BigInt> series_expansion(const HilbertSeries& series, unsigned up_to) {
  std::vector<BigInt> out(up_to + 1, 0);
  const long d = series.dimension;
  const auto& h = series.numerator.coefficients();
  for (long k = 0; k <= static_cast<long>(up_to); ++k) {
    for (long i = 0; i < static_cast<long>(h.size()) && i <= k; ++i) {
      if (d == 0) {
        if (i == k) out[k] += h[i];
      } else {
        out[k] += h[i] * binomial(d - 1 + k - i, d - 1);
      }
    }
  }
  return out;
}

HilbertSeries h_from_differences(std::span<const BigInt> values, unsigned max_dimension) {
  std::vector<BigInt> a(values.begin(), values.end());
  auto stabilized = [](const std::vector<BigInt>& s) {
    return s.size() >= 2 && s[s.size() - 1] == 0 && s[s.size() - 2] == 0;
  };
  for (unsigned d = 0; d <= max_dimension; ++d) {
    if (stabilized(a)) return {IntPolynomial(a), d};
    for (std::size_t k = a.size(); k-- > 1;) a[k] -= a[k - 1];
  }
  throw InsufficientDepthError("Hilbert function prefix of length " + std::to_string(values.size()) +
                               " is too short to recover h(t)");
}

TheoremCheck verify_main_theorem(const Polyomino& p, unsigned depth, const OracleLimits& limits) {
  if (!is_connected(p) || !is_simple(p) || !is_thin(p))
    throw PreconditionError("verify_main_theorem: polyomino must be simple and thin; use conjecture mode instead");
  TheoremCheck check;
  check.series = hilbert_series_thin(p);
  const int needed = check.series.numerator.degree() + 2;
  if (static_cast<int>(depth) < needed)
    throw InsufficientDepthError("verify_main_theorem: depth " + std::to_string(depth) +
                                 " is below rook number + 2 = " + std::to_string(needed));
  check.depth = depth;
  check.oracle_values = hilbert_function_oracle(p, depth, limits);
  check.series_values = series_expansion(check.series, depth);
  check.match = check.oracle_values == check.series_values;
  return check;
}

ConjectureCheck verify_conjecture(const Polyomino& p, unsigned depth, const OracleLimits& limits) {
  if (!is_connected(p)) throw PreconditionError("verify_conjecture: polyomino is not connected");
  ConjectureCheck check;
  check.depth = depth;
  check.thin = is_thin(p);
  check.simple = is_simple(p);
  check.rook = rook_polynomial_bruteforce(p);
  check.oracle_values = hilbert_function_oracle(p, depth, limits);
  check.recovered = h_from_differences(check.oracle_values, static_cast<unsigned>(p.vertices().size()));
  check.equal = check.recovered.numerator == check.rook;
  check.degree_equal = check.recovered.numerator.degree() == check.rook.degree();
  return check;
}

std::string format_binomial(const Binomial& b, std::span<const Point> vertices) {
  auto term = [&](const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t v = 0; v < m.variables(); ++v) {
      if (m[v] == 0) continue;
      if (!first) os << '*';
      first = false;
      os << "x(" << vertices[v].x << ',' << vertices[v].y << ')';
      if (m[v] > 1) os << '^' << m[v];
    }
    if (first) os << '1';
    return os.str();
  };
  return term(b.lead) + " - " + term(b.trail);
}

void write_ideal_dump(std::ostream& out, const Polyomino& p, unsigned up_to, const OracleLimits& limits) {
  if (p.vertices().size() > limits.max_variables) throw ResourceError("oracle: too many variables for a dump");
  const TermOrder order = default_term_order(p);
  const auto generators = inner_2_minors(p, order);
  const auto basis = buchberger(generators, order, up_to + 1);
  out << "# inner 2-minors: " << generators.size() << '\n';
  for (const auto& g : generators) out << format_binomial(g, p.vertices()) << '\n';
  out << "# groebner basis (degrevlex, truncated at degree " << up_to + 1 << ", "
      << (basis.complete() ? "complete" : "truncated") << "): " << basis.elements.size() << '\n';
  for (const auto& g : basis.elements) out << format_binomial(g, p.vertices()) << '\n';
}

}  // namespace polyalg
