#pragma once

// The two reductions that drive every recursion on simple thin polyominoes:
// removing a leaf cell and collapsing a tail or endcut interval. Also single
// cells and the S-property.

#include "polyalg/grid.hpp"

#include <optional>
#include <vector>

namespace polyalg {

/// A cell with an edge {u, v} touching no other cell of the polyomino.
struct Leaf {
  Cell cell;
  Point u;  // leaf corners, u < v
  Point v;
  bool operator==(const Leaf&) const = default;
};

enum class CollapseKind { tail, endcut };

/// Decomposition P = anchor ⊔ interval ⊔ moved around a collapsible maximal
/// interval, and the data needed to glue the remaining parts back together.
struct CollapseStep {
  CellInterval interval;          // the interval being collapsed
  CellInterval crossing;          // the unique maximal interval meeting it in a cell
  Cell pivot;                     // interval ∩ crossing
  CollapseKind kind = CollapseKind::tail;
  Polyomino anchor;               // the part that stays in place
  std::optional<Polyomino> moved; // empty for a tail, a cell interval for an endcut
  // Corners of the pivot: anchor_a, anchor_b lie on the anchor side and are
  // identified with moved_a, moved_b respectively.
  Point anchor_a, anchor_b, moved_a, moved_b;
  Shift translation;              // anchor_a - moved_a, applied to the moved part
  std::size_t length() const { return interval.size(); }
};

/// How to break ties among equally valid choices. first picks the
/// lexicographically smallest candidate; last the largest. Both are valid.
enum class TieBreak { first, last };

/// Every leaf of p with its canonical (lexicographically smallest) free edge.
std::vector<Leaf> leaves(const Polyomino& p);

/// p minus the leaf cell, normalized.
Polyomino remove_leaf(const Polyomino& p, const Leaf& leaf);

/// All valid collapse steps of p, sorted by interval. Requires p simple and
/// thin.
std::vector<CollapseStep> collapse_candidates(const Polyomino& p);

/// A collapse step for p. Tails win over endcuts; within a kind the interval
/// order decides. Throws PreconditionError when p is not simple, not thin or a
/// cell interval, FalsificationError if no collapsible interval exists.
CollapseStep find_collapse(const Polyomino& p, TieBreak tie = TieBreak::first);

/// The leaf of the collapsed interval used for the leaf-removal branch of the
/// recursions: a leaf cell of step.interval other than the pivot.
Leaf interval_leaf(const Polyomino& p, const CollapseStep& step, TieBreak tie = TieBreak::first);

/// anchor ∪ (moved + translation), normalized. Throws PreconditionError if
/// step does not describe a decomposition of p.
Polyomino collapse(const Polyomino& p, const CollapseStep& step);

/// Cells lying in exactly one maximal interval. Requires p thin.
std::vector<Cell> single_cells(const Polyomino& p);

/// Every maximal interval holds exactly one single cell.
bool has_s_property(const Polyomino& p);

}  // namespace polyalg
