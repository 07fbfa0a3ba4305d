#pragma once

// Lattice model of polyominoes: cells, vertices, intervals, parsing and the
// structural classifications (connected, simple, thin).

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyalg {

/// A lattice point (i, j).
struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
};

/// Translation vector.
struct Shift {
  int dx = 0;
  int dy = 0;
  auto operator<=>(const Shift&) const = default;
};

/// The unit cell [(x, y), (x + 1, y + 1)], identified by its lower-left corner.
struct Cell {
  int x = 0;
  int y = 0;

  auto operator<=>(const Cell&) const = default;

  Point lower_left() const { return {x, y}; }
  // Corners in lexicographic order: (x,y), (x,y+1), (x+1,y), (x+1,y+1).
  std::array<Point, 4> corners() const {
    return {Point{x, y}, Point{x, y + 1}, Point{x + 1, y}, Point{x + 1, y + 1}};
  }
  Cell operator+(Shift s) const { return {x + s.dx, y + s.dy}; }
};

/// A finite, non-empty set of distinct cells. Cells are kept sorted
/// lexicographically by (x, y) and the vertex set is cached.
///
/// Connectivity is not part of the type: intermediate cell sets produced by
/// the reductions are validated by the predicates below where it matters.
class Polyomino {
 public:
  // Duplicates collapse. Throws PreconditionError on an empty set.
  explicit Polyomino(std::vector<Cell> cells);

  std::span<const Cell> cells() const { return cells_; }
  std::size_t rank() const { return cells_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }

  bool contains(Cell c) const;
  // Index of c in cells(), or -1.
  long index_of(Cell c) const;

  Polyomino translated(Shift s) const;
  Cell min_corner() const;  // (min x, min y) over cells
  Cell max_corner() const;  // (max x, max y) over cells

  bool operator==(const Polyomino& o) const { return cells_ == o.cells_; }
  auto operator<=>(const Polyomino& o) const { return cells_ <=> o.cells_; }

 private:
  std::vector<Cell> cells_;
  std::vector<Point> vertices_;
};

/// Proper or degenerate vertex interval [lower, upper].
struct VertexInterval {
  Point lower;  // a = (i, j)
  Point upper;  // b = (k, l)

  bool proper() const { return lower.x < upper.x && lower.y < upper.y; }
  Point upper_left() const { return {lower.x, upper.y}; }   // anti-diagonal corner c
  Point lower_right() const { return {upper.x, lower.y}; }  // anti-diagonal corner d
  auto operator<=>(const VertexInterval&) const = default;
};

enum class Orientation { horizontal, vertical, point };

/// A straight run of consecutive cells. A lone cell has orientation point.
struct CellInterval {
  std::vector<Cell> cells;  // sorted, consecutive
  Orientation orientation = Orientation::point;

  std::size_t size() const { return cells.size(); }
  bool contains(Cell c) const;
  Cell front() const { return cells.front(); }
  Cell back() const { return cells.back(); }

  bool operator==(const CellInterval& o) const { return cells == o.cells; }
  auto operator<=>(const CellInterval& o) const { return cells <=> o.cells; }
};

enum class InputFormat { ascii_grid, coordinate_list, automatic };

/// Parses '#'/'.' rows (top row = highest y) or a JSON list of [x, y] pairs
/// and returns the normalized polyomino. Throws ParseError.
Polyomino parse_polyomino(std::string_view text, InputFormat format = InputFormat::automatic);

/// ASCII rendering matching the parser's grid format.
std::string render_ascii(const Polyomino& p);

/// Translates so that min x = min y = 0.
Polyomino normalize(const Polyomino& p);

const std::vector<Point>& vertex_set(const Polyomino& p);

bool is_connected(const Polyomino& p);
bool is_connected(std::span<const Cell> cells);

/// No holes: every empty cell of the bounding box padded by one is
/// edge-connected to the outside. Throws PreconditionError when p is
/// disconnected.
bool is_simple(const Polyomino& p);

/// No 2x2 block of cells.
bool is_thin(const Polyomino& p);

/// All cells on one row or one column, consecutively.
bool is_cell_interval(const Polyomino& p);
bool is_cell_interval(std::span<const Cell> cells);

/// Maximal horizontal and vertical runs, minus runs contained in another run.
/// For thin p these are exactly the maximal inner intervals of cells. For
/// non-thin input only the maximal straight runs are returned; callers that
/// need maximal inner intervals must check is_thin first.
std::vector<CellInterval> maximal_cell_intervals(const Polyomino& p);

/// Every proper vertex interval whose cells all belong to p.
std::vector<VertexInterval> inner_intervals(const Polyomino& p);

}  // namespace polyalg
