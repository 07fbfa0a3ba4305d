#include "polyalg/groebner.hpp"

#include "polyalg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace polyalg {

Monomial::Monomial(std::vector<std::uint16_t> exponents) : exponents_(std::move(exponents)) {
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

Monomial Monomial::variable(std::size_t variables, std::size_t index) {
  std::vector<std::uint16_t> e(variables, 0);
  e.at(index) = 1;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<std::uint16_t> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exponents_[i], other.exponents_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::uint16_t> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponents_[i] + other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  std::vector<std::uint16_t> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (divisor.exponents_[i] > exponents_[i]) throw std::logic_error("monomial division is not exact");
    e[i] = exponents_[i] - divisor.exponents_[i];
  }
  return Monomial(std::move(e));
}

TermOrder TermOrder::degrevlex(std::size_t variables) {
  std::vector<std::size_t> ranking(variables);
  std::iota(ranking.begin(), ranking.end(), 0);
  return TermOrder(std::move(ranking));
}

TermOrder TermOrder::degrevlex(std::vector<std::size_t> ranking) {
  std::vector<std::size_t> sorted = ranking;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw PreconditionError("term order ranking is not a permutation");
  return TermOrder(std::move(ranking));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // The last variable where the exponents differ decides; the smaller
  // exponent wins.
  for (auto pos = ranking_.size(); pos-- > 0;) {
    const std::size_t v = ranking_[pos];
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

std::optional<Binomial> Binomial::oriented(Monomial a, Monomial b, const TermOrder& order) {
  auto c = order.compare(a, b);
  if (c == 0) return std::nullopt;
  if (c > 0) return Binomial{std::move(a), std::move(b)};
  return Binomial{std::move(b), std::move(a)};
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(g.lead);
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() != b.degree() ? a.degree() < b.degree() : a < b; });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<Monomial> out;
  for (const Monomial& m : monomials)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& d) { return d.divides(m); })) out.push_back(m);
  return out;
}

namespace {

class Completion {
 public:
  Completion(const TermOrder& order, std::optional<unsigned> cap, const GroebnerLimits& limits)
      : order_(order), cap_(cap), limits_(limits) {}

  void add(Binomial g) {
    if (!order_.greater(g.lead, g.trail) || g.lead.degree() != g.trail.degree())
      throw std::logic_error("Groebner basis element is not an oriented homogeneous pure binomial");
    if (basis_.size() >= limits_.max_elements)
      throw ResourceError("Groebner basis exceeded " + std::to_string(limits_.max_elements) + " elements");
    const std::size_t j = basis_.size();
    basis_.push_back(std::move(g));
    for (std::size_t i = 0; i < j; ++i) {
      // Coprime leading terms: the S-polynomial reduces to zero.
      if (basis_[i].lead.coprime(basis_[j].lead)) continue;
      const unsigned degree = basis_[i].lead.lcm(basis_[j].lead).degree();
      if (cap_ && degree > *cap_) {
        ++deferred_;
        continue;
      }
      pairs_.push({degree, j, i});
    }
  }

  Monomial normal_form(Monomial m) const {
    for (bool reduced = true; reduced;) {
      reduced = false;
      for (const Binomial& g : basis_) {
        if (g.lead.divides(m)) {
          m = (m / g.lead) * g.trail;
          reduced = true;
          break;
        }
      }
    }
    return m;
  }

  void run() {
    while (!pairs_.empty()) {
      auto [degree, j, i] = pairs_.top();
      pairs_.pop();
      if (++processed_ > limits_.max_pairs)
        throw ResourceError("Buchberger exceeded " + std::to_string(limits_.max_pairs) + " S-pairs");
      const Binomial& f = basis_[i];
      const Binomial& g = basis_[j];
      const Monomial l = f.lead.lcm(g.lead);
      Monomial u = normal_form((l / f.lead) * f.trail);
      Monomial v = normal_form((l / g.lead) * g.trail);
      if (auto h = Binomial::oriented(std::move(u), std::move(v), order_)) add(std::move(*h));
    }
  }

  GroebnerBasis finish() const {
    // Interreduce: keep elements whose lead no other lead divides, then
    // bring trails to normal form against the survivors.
    std::vector<Binomial> kept;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t k = 0; k < basis_.size() && !redundant; ++k) {
        if (k == i || !basis_[k].lead.divides(basis_[i].lead)) continue;
        redundant = basis_[k].lead != basis_[i].lead || k < i;
      }
      if (!redundant) kept.push_back(basis_[i]);
    }
    Completion reducer(order_, std::nullopt, limits_);
    reducer.basis_ = kept;
    for (Binomial& g : kept) g.trail = reducer.normal_form(g.trail);
    std::sort(kept.begin(), kept.end(),
              [&](const Binomial& a, const Binomial& b) { return order_.greater(a.lead, b.lead); });
    GroebnerBasis out;
    out.elements = std::move(kept);
    out.degree_cap = cap_;
    out.deferred_pairs = deferred_;
    out.processed_pairs = processed_;
    return out;
  }

 private:
  // Min-heap on (lcm degree, newer index, older index).
  using Pair = std::tuple<unsigned, std::size_t, std::size_t>;

  const TermOrder& order_;
  std::optional<unsigned> cap_;
  GroebnerLimits limits_;
  std::vector<Binomial> basis_;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs_;
  std::size_t deferred_ = 0;
  std::size_t processed_ = 0;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Binomial> generators, const TermOrder& order,
                         std::optional<unsigned> degree_cap, const GroebnerLimits& limits) {
  Completion completion(order, degree_cap, limits);
  std::vector<Binomial> seen;
  for (const Binomial& g : generators) {
    if (g.lead.variables() != order.variables() || g.trail.variables() != order.variables())
      throw PreconditionError("buchberger: generator has the wrong number of variables");
    auto oriented = Binomial::oriented(g.lead, g.trail, order);
    if (!oriented) continue;
    if (std::find(seen.begin(), seen.end(), *oriented) != seen.end()) continue;
    seen.push_back(*oriented);
    // Reduce against what is already there so the initial basis carries no
    // duplicate leads.
    Monomial u = completion.normal_form(oriented->lead);
    Monomial v = completion.normal_form(oriented->trail);
    if (auto h = Binomial::oriented(std::move(u), std::move(v), order)) completion.add(std::move(*h));
  }
  completion.run();
  return completion.finish();
}

}  // namespace polyalg
