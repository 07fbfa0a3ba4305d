#include "polyalg/rook.hpp"

#include "polyalg/errors.hpp"

#include <bit>

namespace polyalg {

namespace {

using Counts = std::vector<std::uint64_t>;

void count_placements(const std::vector<std::uint64_t>& attack, std::uint64_t candidates, unsigned placed,
                      Counts& counts) {
  if (candidates == 0) {
    ++counts[placed];
    return;
  }
  const unsigned v = static_cast<unsigned>(std::countr_zero(candidates));
  const std::uint64_t bit = std::uint64_t{1} << v;
  count_placements(attack, candidates & ~bit, placed, counts);
  count_placements(attack, candidates & ~bit & ~attack[v], placed + 1, counts);
}

std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

IntPolynomial to_polynomial(const Counts& counts) {
  std::vector<BigInt> coeffs(counts.begin(), counts.end());
  return IntPolynomial(std::move(coeffs));
}

void require_board_size(const Polyomino& p) {
  if (p.rank() > kMaxRookBoardRank)
    throw ResourceError("rook polynomial: rank " + std::to_string(p.rank()) + " exceeds the board limit of " +
                        std::to_string(kMaxRookBoardRank));
}

struct Subtree {
  std::uint64_t candidates;
  unsigned placed;
};

}  // namespace

bool attacks(const Polyomino& p, Cell c, Cell d) {
  if (!p.contains(c) || !p.contains(d)) throw PreconditionError("attacks: cell not in polyomino");
  if (c == d) throw PreconditionError("attacks: cells must differ");
  if (c.x != d.x && c.y != d.y) return false;
  Shift step{d.x > c.x ? 1 : (d.x < c.x ? -1 : 0), d.y > c.y ? 1 : (d.y < c.y ? -1 : 0)};
  for (Cell e = c + step; e != d; e = e + step)
    if (!p.contains(e)) return false;
  return true;
}

std::vector<std::uint64_t> attack_masks(const Polyomino& p) {
  require_board_size(p);
  const auto cells = p.cells();
  std::vector<std::uint64_t> masks(cells.size(), 0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (Shift s : {Shift{1, 0}, Shift{-1, 0}, Shift{0, 1}, Shift{0, -1}}) {
      for (Cell e = cells[i] + s;; e = e + s) {
        long j = p.index_of(e);
        if (j < 0) break;
        masks[i] |= std::uint64_t{1} << j;
      }
    }
  }
  return masks;
}

IntPolynomial serial::rook_polynomial_bruteforce(const Polyomino& p) {
  const auto attack = attack_masks(p);
  Counts counts(p.rank() + 1, 0);
  count_placements(attack, full_mask(p.rank()), 0, counts);
  return to_polynomial(counts);
}

IntPolynomial rook_polynomial_bruteforce(const Polyomino& p) {
  const auto attack = attack_masks(p);
  const std::size_t n = p.rank();
  Counts counts(n + 1, 0);

  // Expand the top of the search tree breadth-first until there is enough
  // independent work; completed placements found on the way are counted here.
  std::vector<Subtree> frontier{{full_mask(n), 0}};
  constexpr std::size_t kTargetSubtrees = 256;
  while (frontier.size() < kTargetSubtrees) {
    std::vector<Subtree> next;
    next.reserve(frontier.size() * 2);
    bool expanded = false;
    for (const Subtree& s : frontier) {
      if (s.candidates == 0) {
        ++counts[s.placed];
        continue;
      }
      expanded = true;
      const unsigned v = static_cast<unsigned>(std::countr_zero(s.candidates));
      const std::uint64_t bit = std::uint64_t{1} << v;
      next.push_back({s.candidates & ~bit, s.placed});
      next.push_back({s.candidates & ~bit & ~attack[v], s.placed + 1});
    }
    frontier = std::move(next);
    if (!expanded) break;
  }

  const long m = static_cast<long>(frontier.size());
#pragma omp parallel
  {
    Counts local(n + 1, 0);
#pragma omp for schedule(dynamic, 4) nowait
    for (long i = 0; i < m; ++i) count_placements(attack, frontier[i].candidates, frontier[i].placed, local);
#pragma omp critical
    for (std::size_t k = 0; k <= n; ++k) counts[k] += local[k];
  }
  return to_polynomial(counts);
}

int rook_number(const Polyomino& p) { return serial::rook_polynomial_bruteforce(p).degree(); }

namespace {

IntPolynomial recurse(const Polyomino& p, TieBreak tie, const RookObserver& observer) {
  if (is_cell_interval(p)) return IntPolynomial{1, static_cast<long>(p.rank())};
  const CollapseStep step = find_collapse(p, tie);
  const Leaf leaf = interval_leaf(p, step, tie);
  const Polyomino without_leaf = remove_leaf(p, leaf);
  const Polyomino collapsed = collapse(p, step);
  IntPolynomial a = recurse(without_leaf, tie, observer);
  IntPolynomial b = recurse(collapsed, tie, observer);
  IntPolynomial result = a + b.shifted(1);
  if (observer) observer({p, step, leaf, without_leaf, collapsed, result, a, b});
  return result;
}

}  // namespace

IntPolynomial rook_polynomial_recursive(const Polyomino& p, TieBreak tie, const RookObserver& observer) {
  if (!is_connected(p) || !is_simple(p))
    throw PreconditionError("rook_polynomial_recursive: polyomino is not simple");
  if (!is_thin(p)) throw PreconditionError("rook_polynomial_recursive: polyomino is not thin");
  return recurse(normalize(p), tie, observer);
}

}  // namespace polyalg
