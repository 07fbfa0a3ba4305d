#pragma once

// Rook polynomials of polyominoes. Two rooks attack when they share a row or
// a column and every cell strictly between them belongs to the polyomino, so
// a missing cell blocks the attack.

#include "polyalg/grid.hpp"
#include "polyalg/polynomial.hpp"
#include "polyalg/structure.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace polyalg {

/// Boards above this rank are rejected with ResourceError.
inline constexpr std::size_t kMaxRookBoardRank = 64;

bool attacks(const Polyomino& p, Cell c, Cell d);

/// attack_masks(p)[i] has bit j set iff cells()[i] and cells()[j] attack.
std::vector<std::uint64_t> attack_masks(const Polyomino& p);

/// Counts non-attacking placements by size. OpenMP kernel: the search tree
/// is split into independent subtrees that are counted in parallel.
IntPolynomial rook_polynomial_bruteforce(const Polyomino& p);

namespace serial {
/// Reference implementation of rook_polynomial_bruteforce: plain backtracking
/// over cells in canonical order.
IntPolynomial rook_polynomial_bruteforce(const Polyomino& p);
}  // namespace serial

int rook_number(const Polyomino& p);

/// One reduction performed by rook_polynomial_recursive.
struct RookRecursionStep {
  const Polyomino& polyomino;
  const CollapseStep& step;
  const Leaf& leaf;
  const Polyomino& without_leaf;  // P minus the leaf of the collapsed interval
  const Polyomino& collapsed;     // collapse(P, step)
  const IntPolynomial& result;
  const IntPolynomial& without_leaf_result;
  const IntPolynomial& collapsed_result;
};

using RookObserver = std::function<void(const RookRecursionStep&)>;

/// r(P) = r(P minus leaf) + t * r(collapse(P)), with 1 + p t for a cell
/// interval of rank p. Requires p simple and thin.
IntPolynomial rook_polynomial_recursive(const Polyomino& p, TieBreak tie = TieBreak::first,
                                        const RookObserver& observer = {});

}  // namespace polyalg
