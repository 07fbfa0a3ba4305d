#pragma once

// Independent reference computations and generators for the test suites.
// Nothing here calls into the code under test except to build inputs.

#include "polyalg/grid.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace polyalg::testing {

inline Polyomino make(std::initializer_list<std::pair<int, int>> cells) {
  std::vector<Cell> out;
  for (auto [x, y] : cells) out.push_back(Cell{x, y});
  return Polyomino(std::move(out));
}

inline Polyomino row(int n) {
  std::vector<Cell> cells;
  for (int i = 0; i < n; ++i) cells.push_back(Cell{i, 0});
  return Polyomino(std::move(cells));
}

inline Polyomino column(int n) {
  std::vector<Cell> cells;
  for (int i = 0; i < n; ++i) cells.push_back(Cell{0, i});
  return Polyomino(std::move(cells));
}

// Fixtures used across suites.
inline Polyomino seven_cell() { return make({{0, 2}, {1, 2}, {1, 1}, {1, 0}, {2, 1}, {3, 1}, {3, 0}}); }
inline Polyomino stair() { return make({{0, 2}, {1, 2}, {1, 1}, {2, 1}, {2, 0}}); }
inline Polyomino square() { return make({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
inline Polyomino skew() { return make({{0, 0}, {0, 1}, {1, 1}, {1, 2}}); }
// Ring of eight cells around the hole (1,1).
inline Polyomino ring() { return make({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}}); }

// Redelmeier's algorithm: counts fixed polyominoes of each rank 1..n without
// storing them. Cells with y > 0, or y == 0 and x >= 0, are allowed.
inline std::vector<std::uint64_t> redelmeier_counts(int n) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  using P = std::pair<int, int>;
  std::set<P> seen;  // cells ever added to the untried set on this branch
  std::set<P> placed;
  auto allowed = [](P c) { return c.second > 0 || (c.second == 0 && c.first >= 0); };
  auto neighbours = [](P c) {
    return std::vector<P>{{c.first + 1, c.second}, {c.first - 1, c.second}, {c.first, c.second + 1},
                          {c.first, c.second - 1}};
  };
  auto recurse = [&](auto&& self, std::vector<P> untried, int size) -> void {
    while (!untried.empty()) {
      const P c = untried.back();
      untried.pop_back();
      placed.insert(c);
      ++counts[size + 1];
      if (size + 1 < n) {
        std::vector<P> next = untried;
        std::vector<P> added;
        for (P nb : neighbours(c)) {
          if (!allowed(nb) || seen.count(nb)) continue;
          bool adjacent_to_placed = false;
          for (P q : neighbours(nb))
            if (q != c && placed.count(q)) adjacent_to_placed = true;
          if (adjacent_to_placed) continue;
          seen.insert(nb);
          added.push_back(nb);
          next.push_back(nb);
        }
        self(self, next, size + 1);
        for (P a : added) seen.erase(a);
      }
      placed.erase(c);
    }
  };
  seen.insert({0, 0});
  recurse(recurse, {{0, 0}}, 0);
  return counts;
}

// Rook polynomial by direct search: two cells attack when they share a row
// or column and every cell strictly between them belongs to the polyomino.
inline std::vector<std::uint64_t> naive_rook_counts(const Polyomino& p) {
  const std::vector<Cell> cells(p.cells().begin(), p.cells().end());
  auto attack = [&](Cell a, Cell b) {
    if (a.x != b.x && a.y != b.y) return false;
    const int dx = (b.x > a.x) - (b.x < a.x);
    const int dy = (b.y > a.y) - (b.y < a.y);
    for (Cell c{a.x + dx, a.y + dy}; !(c == b); c = Cell{c.x + dx, c.y + dy})
      if (!p.contains(c)) return false;
    return true;
  };
  std::vector<std::uint64_t> counts(1, 0);
  std::vector<Cell> chosen;
  auto search = [&](auto&& self, std::size_t from) -> void {
    if (counts.size() <= chosen.size()) counts.resize(chosen.size() + 1, 0);
    ++counts[chosen.size()];
    for (std::size_t i = from; i < cells.size(); ++i) {
      if (std::any_of(chosen.begin(), chosen.end(), [&](Cell c) { return attack(c, cells[i]); })) continue;
      chosen.push_back(cells[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);
  return counts;
}

// Hilbert function of h(t)/(1-t)^d in plain 64-bit arithmetic.
inline std::vector<std::int64_t> expand(const std::vector<std::int64_t>& h, int d, int up_to) {
  auto choose = [](std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return std::int64_t{0};
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  std::vector<std::int64_t> out(up_to + 1, 0);
  for (int k = 0; k <= up_to; ++k)
    for (int i = 0; i < static_cast<int>(h.size()) && i <= k; ++i)
      out[k] += h[i] * (d == 0 ? (i == k) : choose(d - 1 + k - i, d - 1));
  return out;
}

// Random polyomino of the given rank grown from the origin.
inline Polyomino random_polyomino(std::mt19937& rng, int rank) {
  std::vector<Cell> cells{Cell{0, 0}};
  std::set<Cell> taken{Cell{0, 0}};
  while (static_cast<int>(cells.size()) < rank) {
    const Cell base = cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
    static constexpr int dx[] = {1, -1, 0, 0};
    static constexpr int dy[] = {0, 0, 1, -1};
    const int k = std::uniform_int_distribution<int>(0, 3)(rng);
    const Cell next{base.x + dx[k], base.y + dy[k]};
    if (taken.insert(next).second) cells.push_back(next);
  }
  return Polyomino(std::move(cells));
}

// Random simple thin polyomino: rejection sampling over random growth.
template <class Accept>
inline Polyomino random_polyomino_where(std::mt19937& rng, int rank, Accept accept) {
  for (;;) {
    Polyomino p = random_polyomino(rng, rank);
    if (accept(p)) return p;
  }
}

}  // namespace polyalg::testing
