#include "polyalg/structure.hpp"

#include "polyalg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace polyalg {

namespace {

void require_simple_thin(const Polyomino& p, const char* what) {
  if (!is_connected(p)) throw PreconditionError(std::string(what) + ": polyomino is not connected");
  if (!is_simple(p)) throw PreconditionError(std::string(what) + ": polyomino is not simple");
  if (!is_thin(p)) throw PreconditionError(std::string(what) + ": polyomino is not thin");
}

std::vector<std::vector<Cell>> components(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  std::vector<std::vector<Cell>> out;
  std::vector<char> seen(cells.size(), 0);
  for (std::size_t start = 0; start < cells.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Cell> comp;
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      Cell c = cells[stack.back()];
      stack.pop_back();
      comp.push_back(c);
      for (Shift s : {Shift{1, 0}, Shift{-1, 0}, Shift{0, 1}, Shift{0, -1}}) {
        auto it = std::lower_bound(cells.begin(), cells.end(), c + s);
        if (it == cells.end() || *it != c + s) continue;
        auto i = static_cast<std::size_t>(it - cells.begin());
        if (!seen[i]) {
          seen[i] = 1;
          stack.push_back(i);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Fills the corner and translation fields from the side of the pivot on
// which the anchor lies.
void assign_corners(CollapseStep& step) {
  const Cell d = step.pivot;
  const Polyomino& anchor = step.anchor;
  if (step.crossing.orientation == Orientation::horizontal) {
    bool anchor_left = anchor.contains({d.x - 1, d.y});
    if (!anchor_left && !anchor.contains({d.x + 1, d.y}))
      throw std::logic_error("collapse: anchor does not touch the pivot along the crossing interval");
    int near = anchor_left ? d.x : d.x + 1;
    int far = anchor_left ? d.x + 1 : d.x;
    step.anchor_a = {near, d.y + 1};
    step.anchor_b = {near, d.y};
    step.moved_a = {far, d.y + 1};
    step.moved_b = {far, d.y};
  } else {
    bool anchor_below = anchor.contains({d.x, d.y - 1});
    if (!anchor_below && !anchor.contains({d.x, d.y + 1}))
      throw std::logic_error("collapse: anchor does not touch the pivot along the crossing interval");
    int near = anchor_below ? d.y : d.y + 1;
    int far = anchor_below ? d.y + 1 : d.y;
    step.anchor_a = {d.x + 1, near};
    step.anchor_b = {d.x, near};
    step.moved_a = {d.x + 1, far};
    step.moved_b = {d.x, far};
  }
  step.translation = {step.anchor_a.x - step.moved_a.x, step.anchor_a.y - step.moved_a.y};
}

}  // namespace

std::vector<Leaf> leaves(const Polyomino& p) {
  std::map<Point, int> uses;
  for (const Cell& c : p.cells())
    for (const Point& v : c.corners()) ++uses[v];

  std::vector<Leaf> out;
  for (const Cell& c : p.cells()) {
    const int x = c.x, y = c.y;
    // Edges as (u, v) with u < v, listed in lexicographic order.
    const std::array<std::pair<Point, Point>, 4> edges{{
        {{x, y}, {x, y + 1}},
        {{x, y}, {x + 1, y}},
        {{x, y + 1}, {x + 1, y + 1}},
        {{x + 1, y}, {x + 1, y + 1}},
    }};
    for (const auto& [u, v] : edges) {
      if (uses[u] == 1 && uses[v] == 1) {
        out.push_back({c, u, v});
        break;
      }
    }
  }
  return out;
}

Polyomino remove_leaf(const Polyomino& p, const Leaf& leaf) {
  if (p.rank() < 2) throw PreconditionError("remove_leaf: cannot remove the only cell");
  auto all = leaves(p);
  if (std::none_of(all.begin(), all.end(), [&](const Leaf& l) { return l.cell == leaf.cell; }))
    throw PreconditionError("remove_leaf: cell is not a leaf");
  std::vector<Cell> rest;
  for (const Cell& c : p.cells())
    if (c != leaf.cell) rest.push_back(c);
  return normalize(Polyomino(std::move(rest)));
}

std::vector<CollapseStep> collapse_candidates(const Polyomino& p) {
  require_simple_thin(p, "collapse_candidates");
  const auto intervals = maximal_cell_intervals(p);
  std::vector<CollapseStep> out;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const CellInterval& interval = intervals[i];
    std::size_t crossing_index = intervals.size();
    Cell pivot{};
    int crossings = 0;
    for (std::size_t j = 0; j < intervals.size(); ++j) {
      if (j == i) continue;
      for (const Cell& c : intervals[j].cells) {
        if (interval.contains(c)) {
          ++crossings;
          crossing_index = j;
          pivot = c;
          break;
        }
      }
    }
    if (crossings != 1) continue;

    std::vector<Cell> rest;
    for (const Cell& c : p.cells())
      if (!interval.contains(c)) rest.push_back(c);
    auto parts = components(std::move(rest));
    if (parts.empty() || parts.size() > 2) continue;

    CollapseStep step{interval, intervals[crossing_index], pivot, CollapseKind::tail,
                      Polyomino(parts.front()), std::nullopt, {}, {}, {}, {}, {}};
    if (parts.size() == 2) {
      // components() returns parts ordered by their smallest cell, so on a tie
      // the anchor keeps the lexicographically smallest cell.
      bool first_interval = is_cell_interval(parts[0]);
      bool second_interval = is_cell_interval(parts[1]);
      if (!first_interval && !second_interval) continue;
      std::size_t moved = second_interval ? 1 : 0;
      step.kind = CollapseKind::endcut;
      step.anchor = Polyomino(parts[1 - moved]);
      step.moved = Polyomino(parts[moved]);
    }
    assign_corners(step);
    out.push_back(std::move(step));
  }
  return out;
}

CollapseStep find_collapse(const Polyomino& p, TieBreak tie) {
  require_simple_thin(p, "find_collapse");
  if (is_cell_interval(p)) throw PreconditionError("find_collapse: polyomino is a cell interval");
  auto candidates = collapse_candidates(p);
  if (candidates.empty())
    throw FalsificationError("no collapsible interval found in a simple thin polyomino that is not a cell interval");
  std::vector<CollapseStep> tails;
  for (const auto& s : candidates)
    if (s.kind == CollapseKind::tail) tails.push_back(s);
  auto& pool = tails.empty() ? candidates : tails;
  return tie == TieBreak::first ? pool.front() : pool.back();
}

Leaf interval_leaf(const Polyomino& p, const CollapseStep& step, TieBreak tie) {
  std::vector<Leaf> usable;
  for (const Leaf& l : leaves(p))
    if (step.interval.contains(l.cell) && l.cell != step.pivot) usable.push_back(l);
  if (usable.empty()) throw FalsificationError("collapsible interval has no leaf apart from its pivot");
  return tie == TieBreak::first ? usable.front() : usable.back();
}

Polyomino collapse(const Polyomino& p, const CollapseStep& step) {
  auto invalid = [](const std::string& why) { return PreconditionError("collapse: invalid step, " + why); };
  std::size_t total = step.interval.size() + step.anchor.rank() + (step.moved ? step.moved->rank() : 0);
  if (total != p.rank()) throw invalid("parts do not add up to the polyomino");
  std::vector<Cell> all(step.interval.cells);
  all.insert(all.end(), step.anchor.cells().begin(), step.anchor.cells().end());
  if (step.moved) all.insert(all.end(), step.moved->cells().begin(), step.moved->cells().end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw invalid("parts overlap");
  if (!std::equal(all.begin(), all.end(), p.cells().begin(), p.cells().end()))
    throw invalid("parts are not cells of the polyomino");
  if (!step.interval.contains(step.pivot) || !step.crossing.contains(step.pivot))
    throw invalid("pivot is not the crossing cell");
  if (step.moved && !is_cell_interval(*step.moved)) throw invalid("moved part is not a cell interval");
  if (std::abs(step.translation.dx) + std::abs(step.translation.dy) != 1)
    throw invalid("translation is not a unit vector");

  std::vector<Cell> glued(step.anchor.cells().begin(), step.anchor.cells().end());
  if (step.moved)
    for (const Cell& c : step.moved->cells()) glued.push_back(c + step.translation);
  Polyomino result(glued);
  if (result.rank() != glued.size()) throw invalid("translated part overlaps the anchor");
  return normalize(result);
}

std::vector<Cell> single_cells(const Polyomino& p) {
  if (!is_thin(p)) throw PreconditionError("single_cells: polyomino is not thin");
  std::map<Cell, int> membership;
  for (const auto& interval : maximal_cell_intervals(p))
    for (const Cell& c : interval.cells) ++membership[c];
  std::vector<Cell> out;
  for (const auto& [cell, count] : membership)
    if (count == 1) out.push_back(cell);
  return out;
}

bool has_s_property(const Polyomino& p) {
  auto singles = single_cells(p);
  for (const auto& interval : maximal_cell_intervals(p)) {
    auto n = std::count_if(interval.cells.begin(), interval.cells.end(), [&](Cell c) {
      return std::binary_search(singles.begin(), singles.end(), c);
    });
    if (n != 1) return false;
  }
  return true;
}

}  // namespace polyalg
