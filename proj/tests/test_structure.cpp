#include "polyalg/enumerate.hpp"
#include "polyalg/errors.hpp"
#include "polyalg/hilbert.hpp"
#include "polyalg/structure.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace polyalg;
using namespace polyalg::testing;

namespace {

std::vector<Cell> leaf_cells(const Polyomino& p) {
  std::vector<Cell> out;
  for (const auto& l : leaves(p)) out.push_back(l.cell);
  return out;
}

const std::vector<Polyomino>& simple_thin_corpus() {
  static const auto corpus = filter_corpus(7, CorpusFilter{.simple = true, .thin = true});
  return corpus;
}

}  // namespace

TEST(Leaves, Skew) { EXPECT_EQ(leaf_cells(skew()), (std::vector<Cell>{{0, 0}, {1, 2}})); }

TEST(Leaves, SevenCell) {
  // The top-left cell and the two bottom cells.
  EXPECT_EQ(leaf_cells(seven_cell()), (std::vector<Cell>{{0, 2}, {1, 0}, {3, 0}}));
  const auto ls = leaves(seven_cell());
  EXPECT_EQ(ls[0].u, (Point{0, 2}));
  EXPECT_EQ(ls[0].v, (Point{0, 3}));
}

TEST(Leaves, IntervalEndsAndSingleCell) {
  EXPECT_EQ(leaf_cells(row(3)), (std::vector<Cell>{{0, 0}, {2, 0}}));
  EXPECT_EQ(leaf_cells(make({{0, 0}})), (std::vector<Cell>{{0, 0}}));
  EXPECT_TRUE(leaves(ring()).empty());
}

TEST(Leaves, RemoveLeaf) {
  const auto p = seven_cell();
  const auto first_leaf = leaves(p).front();
  const auto without = remove_leaf(p, first_leaf);
  EXPECT_EQ(without, make({{0, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 0}, {2, 1}}));
  EXPECT_THROW(remove_leaf(make({{0, 0}}), leaves(make({{0, 0}})).front()), PreconditionError);
  EXPECT_THROW(remove_leaf(p, Leaf{Cell{1, 1}, Point{1, 1}, Point{1, 2}}), PreconditionError);
}

TEST(Collapse, SevenCellTail) {
  const auto step = find_collapse(seven_cell());
  EXPECT_EQ(step.kind, CollapseKind::tail);
  EXPECT_EQ(step.interval.cells, (std::vector<Cell>{{0, 2}, {1, 2}}));
  EXPECT_EQ(step.crossing.cells, (std::vector<Cell>{{1, 0}, {1, 1}, {1, 2}}));
  EXPECT_EQ(step.pivot, (Cell{1, 2}));
  EXPECT_FALSE(step.moved.has_value());
  EXPECT_EQ(collapse(seven_cell(), step), make({{0, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}}));
  EXPECT_EQ(interval_leaf(seven_cell(), step).cell, (Cell{0, 2}));
}

TEST(Collapse, PlusPentominoIsAnEndcut) {
  // Both maximal intervals cross in their middle cell, so neither is a tail.
  const auto plus = make({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}});
  const auto step = find_collapse(plus);
  EXPECT_EQ(step.kind, CollapseKind::endcut);
  EXPECT_EQ(step.interval.cells, (std::vector<Cell>{{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(step.pivot, (Cell{1, 1}));
  EXPECT_EQ(step.anchor, make({{1, 0}}));
  ASSERT_TRUE(step.moved.has_value());
  EXPECT_EQ(*step.moved, make({{1, 2}}));
  EXPECT_EQ(step.translation, (Shift{0, -1}));
  EXPECT_EQ(collapse(plus, step), column(2));
}

TEST(Collapse, TailPreferredOverEndcut) {
  const auto p = make({{0, 1}, {1, 1}, {1, 0}, {1, 2}, {2, 2}, {3, 2}});
  const auto step = find_collapse(p);
  EXPECT_EQ(step.kind, CollapseKind::tail);
  EXPECT_EQ(collapse(p, step).rank(), p.rank() - step.length());
}

TEST(Collapse, Errors) {
  EXPECT_THROW(find_collapse(row(3)), PreconditionError);
  EXPECT_THROW(find_collapse(square()), PreconditionError);
  EXPECT_THROW(find_collapse(ring()), PreconditionError);
  auto step = find_collapse(seven_cell());
  EXPECT_THROW(collapse(stair(), step), PreconditionError);
}

TEST(SingleCells, Stair) {
  EXPECT_EQ(single_cells(stair()), (std::vector<Cell>{{0, 2}, {2, 0}}));
  EXPECT_FALSE(has_s_property(stair()));
}

TEST(SingleCells, SevenCell) {
  EXPECT_TRUE(has_s_property(seven_cell()));
  EXPECT_TRUE(has_s_property(make({{0, 0}})));
  EXPECT_FALSE(has_s_property(row(2)));
  EXPECT_THROW(single_cells(square()), PreconditionError);
}

TEST(StructureProperty, CollapseAndLeafLaws) {
  // Over every simple thin polyomino of rank <= 7 and both tie-breaks:
  // collapse removes the interval's cells and |I| from the Krull dimension,
  // leaf removal removes one cell and one dimension, and both results stay
  // simple and thin.
  std::size_t checked = 0;
  for (const auto& p : simple_thin_corpus()) {
    if (is_cell_interval(p)) continue;
    for (TieBreak tie : {TieBreak::first, TieBreak::last}) {
      const auto step = find_collapse(p, tie);
      const auto collapsed = collapse(p, step);
      EXPECT_EQ(collapsed.rank(), p.rank() - step.length());
      EXPECT_EQ(krull_dimension(collapsed) + step.length(), krull_dimension(p));
      EXPECT_TRUE(is_thin(collapsed) && is_simple(collapsed));
      EXPECT_EQ(step.translation.dx * step.translation.dx + step.translation.dy * step.translation.dy, 1);
      EXPECT_EQ(step.kind == CollapseKind::tail, !step.moved.has_value());
      if (step.moved) EXPECT_TRUE(is_cell_interval(*step.moved));

      const auto leaf = interval_leaf(p, step, tie);
      EXPECT_TRUE(step.interval.contains(leaf.cell));
      EXPECT_NE(leaf.cell, step.pivot);
      const auto without = remove_leaf(p, leaf);
      EXPECT_EQ(without.rank() + 1, p.rank());
      EXPECT_EQ(krull_dimension(without) + 1, krull_dimension(p));
      EXPECT_TRUE(is_thin(without) && is_simple(without));
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(StructureProperty, EverySimpleThinNonIntervalCollapsesTailFirst) {
  for (const auto& p : simple_thin_corpus()) {
    if (is_cell_interval(p)) continue;
    const auto candidates = collapse_candidates(p);
    ASSERT_FALSE(candidates.empty()) << render_ascii(p);
    EXPECT_EQ(find_collapse(p).kind,
              std::any_of(candidates.begin(), candidates.end(),
                          [](const auto& c) { return c.kind == CollapseKind::tail; })
                  ? CollapseKind::tail
                  : CollapseKind::endcut);
  }
}
