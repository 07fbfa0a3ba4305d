#include "polyalg/grid.hpp"

#include "polyalg/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <sstream>

namespace polyalg {

namespace {

// Occupancy bitmap over a rectangle of cells.
class CellGrid {
 public:
  CellGrid(Cell lo, Cell hi) : lo_(lo), width_(hi.x - lo.x + 1), height_(hi.y - lo.y + 1) {
    occupied_.assign(static_cast<std::size_t>(width_) * height_, 0);
  }

  bool inside(Cell c) const {
    return c.x >= lo_.x && c.y >= lo_.y && c.x < lo_.x + width_ && c.y < lo_.y + height_;
  }
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(c.y - lo_.y) * width_ + (c.x - lo_.x);
  }
  bool get(Cell c) const { return inside(c) && occupied_[index(c)]; }
  void set(Cell c) { occupied_[index(c)] = 1; }

 private:
  Cell lo_;
  int width_;
  int height_;
  std::vector<unsigned char> occupied_;
};

constexpr std::array<Shift, 4> kNeighbours{Shift{1, 0}, Shift{-1, 0}, Shift{0, 1}, Shift{0, -1}};

std::vector<Cell> sorted_unique(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

Polyomino parse_ascii(std::string_view text) {
  std::vector<std::string> rows;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    rows.push_back(line);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  auto first = std::find_if(rows.begin(), rows.end(), [](const std::string& r) { return !r.empty(); });
  rows.erase(rows.begin(), first);

  std::vector<Cell> cells;
  const int height = static_cast<int>(rows.size());
  for (int r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      char ch = rows[r][c];
      if (ch == '#') {
        cells.push_back({static_cast<int>(c), height - 1 - r});
      } else if (ch != '.') {
        throw ParseError("unexpected character '" + std::string(1, ch) + "' at row " +
                         std::to_string(r + 1) + ", column " + std::to_string(c + 1));
      }
    }
  }
  if (cells.empty()) throw ParseError("no cells in grid");
  return normalize(Polyomino(std::move(cells)));
}

Polyomino parse_coordinates(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid coordinate list: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("coordinate list must be a JSON array");
  std::vector<Cell> cells;
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer())
      throw ParseError("each coordinate must be an [x, y] pair of integers, got " + entry.dump());
    auto in_range = [](const nlohmann::json& v) {
      auto n = v.get<long long>();
      return n >= std::numeric_limits<int>::min() / 2 && n <= std::numeric_limits<int>::max() / 2;
    };
    if (!in_range(entry[0]) || !in_range(entry[1]))
      throw ParseError("coordinate out of range: " + entry.dump());
    cells.push_back({entry[0].get<int>(), entry[1].get<int>()});
  }
  if (cells.empty()) throw ParseError("empty coordinate list");
  return normalize(Polyomino(std::move(cells)));
}

}  // namespace

Polyomino::Polyomino(std::vector<Cell> cells) : cells_(sorted_unique(std::move(cells))) {
  if (cells_.empty()) throw PreconditionError("a polyomino needs at least one cell");
  vertices_.reserve(cells_.size() * 4);
  for (const Cell& c : cells_)
    for (const Point& v : c.corners()) vertices_.push_back(v);
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Polyomino::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

long Polyomino::index_of(Cell c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  return (it != cells_.end() && *it == c) ? static_cast<long>(it - cells_.begin()) : -1;
}

Polyomino Polyomino::translated(Shift s) const {
  std::vector<Cell> moved;
  moved.reserve(cells_.size());
  for (const Cell& c : cells_) moved.push_back(c + s);
  return Polyomino(std::move(moved));
}

Cell Polyomino::min_corner() const {
  Cell m = cells_.front();
  for (const Cell& c : cells_) m = {std::min(m.x, c.x), std::min(m.y, c.y)};
  return m;
}

Cell Polyomino::max_corner() const {
  Cell m = cells_.front();
  for (const Cell& c : cells_) m = {std::max(m.x, c.x), std::max(m.y, c.y)};
  return m;
}

bool CellInterval::contains(Cell c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

Polyomino parse_polyomino(std::string_view text, InputFormat format) {
  if (format == InputFormat::automatic) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string_view::npos) throw ParseError("empty input");
    format = text[pos] == '[' ? InputFormat::coordinate_list : InputFormat::ascii_grid;
  }
  return format == InputFormat::coordinate_list ? parse_coordinates(text) : parse_ascii(text);
}

std::string render_ascii(const Polyomino& p) {
  Cell lo = p.min_corner();
  Cell hi = p.max_corner();
  std::string out;
  for (int y = hi.y; y >= lo.y; --y) {
    for (int x = lo.x; x <= hi.x; ++x) out += p.contains({x, y}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

Polyomino normalize(const Polyomino& p) {
  Cell lo = p.min_corner();
  if (lo.x == 0 && lo.y == 0) return p;
  return p.translated({-lo.x, -lo.y});
}

const std::vector<Point>& vertex_set(const Polyomino& p) { return p.vertices(); }

bool is_connected(std::span<const Cell> cells) {
  if (cells.empty()) return false;
  std::vector<Cell> sorted(cells.begin(), cells.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> seen(sorted.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Cell c = sorted[stack.back()];
    stack.pop_back();
    for (Shift s : kNeighbours) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), c + s);
      if (it == sorted.end() || *it != c + s) continue;
      auto i = static_cast<std::size_t>(it - sorted.begin());
      if (seen[i]) continue;
      seen[i] = 1;
      ++reached;
      stack.push_back(i);
    }
  }
  return reached == sorted.size();
}

bool is_connected(const Polyomino& p) { return is_connected(p.cells()); }

bool is_simple(const Polyomino& p) {
  if (!is_connected(p)) throw PreconditionError("simplicity is only defined for connected polyominoes");
  Cell lo = p.min_corner();
  Cell hi = p.max_corner();
  lo = {lo.x - 1, lo.y - 1};
  hi = {hi.x + 1, hi.y + 1};
  CellGrid filled(lo, hi);
  for (const Cell& c : p.cells()) filled.set(c);

  // Flood the complement from a padded corner; any empty cell left unreached
  // is enclosed.
  CellGrid reached(lo, hi);
  std::deque<Cell> queue{lo};
  reached.set(lo);
  while (!queue.empty()) {
    Cell c = queue.front();
    queue.pop_front();
    for (Shift s : kNeighbours) {
      Cell n = c + s;
      if (!filled.inside(n) || filled.get(n) || reached.get(n)) continue;
      reached.set(n);
      queue.push_back(n);
    }
  }
  for (int y = lo.y; y <= hi.y; ++y)
    for (int x = lo.x; x <= hi.x; ++x)
      if (!filled.get({x, y}) && !reached.get({x, y})) return false;
  return true;
}

bool is_thin(const Polyomino& p) {
  for (const Cell& c : p.cells())
    if (p.contains({c.x + 1, c.y}) && p.contains({c.x, c.y + 1}) && p.contains({c.x + 1, c.y + 1}))
      return false;
  return true;
}

bool is_cell_interval(std::span<const Cell> cells) {
  if (cells.empty()) return false;
  std::vector<Cell> sorted(cells.begin(), cells.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  bool same_x = std::all_of(sorted.begin(), sorted.end(), [&](Cell c) { return c.x == sorted[0].x; });
  bool same_y = std::all_of(sorted.begin(), sorted.end(), [&](Cell c) { return c.y == sorted[0].y; });
  if (same_x) return sorted.back().y - sorted.front().y + 1 == static_cast<int>(sorted.size());
  if (same_y) return sorted.back().x - sorted.front().x + 1 == static_cast<int>(sorted.size());
  return false;
}

bool is_cell_interval(const Polyomino& p) { return is_cell_interval(p.cells()); }

std::vector<CellInterval> maximal_cell_intervals(const Polyomino& p) {
  std::vector<CellInterval> out;
  auto run_length = [&](Cell c, Shift step) {
    int n = 0;
    for (Cell d = c + step; p.contains(d); d = d + step) ++n;
    return n;
  };
  for (const Cell& c : p.cells()) {
    int left = run_length(c, {-1, 0});
    int right = run_length(c, {1, 0});
    int down = run_length(c, {0, -1});
    int up = run_length(c, {0, 1});
    // Emit each run once, from its lowest cell.
    if (left == 0 && right > 0) {
      CellInterval run{{}, Orientation::horizontal};
      for (int i = 0; i <= right; ++i) run.cells.push_back({c.x + i, c.y});
      out.push_back(std::move(run));
    }
    if (down == 0 && up > 0) {
      CellInterval run{{}, Orientation::vertical};
      for (int i = 0; i <= up; ++i) run.cells.push_back({c.x, c.y + i});
      out.push_back(std::move(run));
    }
    if (left + right + down + up == 0) out.push_back(CellInterval{{c}, Orientation::point});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexInterval> inner_intervals(const Polyomino& p) {
  std::vector<VertexInterval> out;
  for (const Cell& lo : p.cells()) {
    // Grow the rectangle with lower-left cell lo row by row; the admissible
    // width can only shrink as rows are added.
    int max_width = 0;
    while (p.contains({lo.x + max_width, lo.y})) ++max_width;
    for (int h = 0; max_width > 0; ++h) {
      int width = 0;
      while (width < max_width && p.contains({lo.x + width, lo.y + h})) ++width;
      max_width = width;
      for (int w = 1; w <= max_width; ++w)
        out.push_back({Point{lo.x, lo.y}, Point{lo.x + w, lo.y + h + 1}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polyalg
