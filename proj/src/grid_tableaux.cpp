#include "planedyn/grid_tableaux.hpp"

#include <algorithm>
#include <deque>

namespace planedyn {

Shape::Shape(int rows_, int cols_) : rows(rows_), cols(cols_) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("shape dimensions must be positive, got " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  }
}

bool in_bounds(Shape shape, Box box) {
  return box.row >= 1 && box.row <= shape.rows && box.col >= 1 && box.col <= shape.cols;
}

std::size_t cell_index(Shape shape, Box box) {
  return static_cast<std::size_t>((box.row - 1) * shape.cols + (box.col - 1));
}

Box box_at(Shape shape, std::size_t index) {
  const auto i = static_cast<int>(index);
  return {i / shape.cols + 1, i % shape.cols + 1};
}

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::positivity: return "positivity";
    case Rule::ceiling: return "ceiling";
    case Rule::row_increase: return "row_increase";
    case Rule::column_increase: return "column_increase";
  }
  return "unknown";
}

ValidationResult validate_increasing(const Grid& grid, int q) {
  if (grid.empty() || grid.front().empty()) {
    throw std::invalid_argument("grid must have at least one row and one column");
  }
  const auto cols = grid.front().size();
  for (const auto& row : grid) {
    if (row.size() != cols) throw std::invalid_argument("grid rows have unequal lengths");
  }

  ValidationResult result;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Box box{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
      const int value = grid[i][j];
      if (value < 1) result.violations.push_back({box, Rule::positivity});
      if (value > q) result.violations.push_back({box, Rule::ceiling});
      if (j > 0 && grid[i][j - 1] >= value) result.violations.push_back({box, Rule::row_increase});
      if (i > 0 && grid[i - 1][j] >= value) {
        result.violations.push_back({box, Rule::column_increase});
      }
    }
  }
  return result;
}

IncreasingTableau IncreasingTableau::from_rows(const Grid& rows, int q) {
  if (q > kMaxCeiling) {
    throw InvalidTableau("ceiling " + std::to_string(q) + " exceeds " +
                             std::to_string(kMaxCeiling),
                         {});
  }
  auto check = validate_increasing(rows, q);
  if (!check.ok()) {
    const auto& first = check.violations.front();
    throw InvalidTableau("not an increasing tableau: " + std::string(to_string(first.rule)) +
                             " violated at (" + std::to_string(first.box.row) + "," +
                             std::to_string(first.box.col) + ")",
                         std::move(check.violations));
  }
  const Shape shape(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  std::vector<std::uint8_t> cells;
  cells.reserve(static_cast<std::size_t>(shape.size()));
  for (const auto& row : rows) {
    for (int value : row) cells.push_back(static_cast<std::uint8_t>(value));
  }
  return {shape, q, std::move(cells)};
}

IncreasingTableau IncreasingTableau::from_trusted(Shape shape, int q,
                                                  std::vector<std::uint8_t> cells) {
  return {shape, q, std::move(cells)};
}

Grid IncreasingTableau::rows() const {
  Grid out(static_cast<std::size_t>(shape_.rows));
  for (int i = 0; i < shape_.rows; ++i) {
    auto begin = cells_.begin() + static_cast<std::ptrdiff_t>(i * shape_.cols);
    out[static_cast<std::size_t>(i)].assign(begin, begin + shape_.cols);
  }
  return out;
}

std::strong_ordering operator<=>(const IncreasingTableau& lhs, const IncreasingTableau& rhs) {
  if (auto c = lhs.shape_.rows <=> rhs.shape_.rows; c != 0) return c;
  if (auto c = lhs.shape_.cols <=> rhs.shape_.cols; c != 0) return c;
  if (auto c = lhs.ceiling_ <=> rhs.ceiling_; c != 0) return c;
  return std::lexicographical_compare_three_way(lhs.cells_.begin(), lhs.cells_.end(),
                                                rhs.cells_.begin(), rhs.cells_.end());
}

IncreasingTableau minimal_tableau(Shape shape) {
  std::vector<std::uint8_t> cells;
  cells.reserve(static_cast<std::size_t>(shape.size()));
  for (int i = 1; i <= shape.rows; ++i) {
    for (int j = 1; j <= shape.cols; ++j) cells.push_back(static_cast<std::uint8_t>(i + j - 1));
  }
  return IncreasingTableau::from_trusted(shape, shape.min_ceiling(), std::move(cells));
}

bool is_minimal(const IncreasingTableau& t) {
  const Shape shape = t.shape();
  for (int i = 1; i <= shape.rows; ++i) {
    for (int j = 1; j <= shape.cols; ++j) {
      if (t(i, j) != i + j - 1) return false;
    }
  }
  return true;
}

namespace {

bool on_frame(Shape shape, int row, int col) {
  return row == 1 || row == shape.rows || col == 1 || col == shape.cols;
}

}  // namespace

std::vector<Box> frame_boxes(Shape shape) {
  std::vector<Box> out;
  for (int i = 1; i <= shape.rows; ++i) {
    for (int j = 1; j <= shape.cols; ++j) {
      if (on_frame(shape, i, j)) out.push_back({i, j});
    }
  }
  return out;
}

Frame frame_of(const IncreasingTableau& t) {
  std::vector<std::pair<Box, int>> entries;
  for (Box box : frame_boxes(t.shape())) entries.emplace_back(box, t.at(box));
  return {t.shape(), std::move(entries)};
}

bool same_frame(const IncreasingTableau& lhs, const IncreasingTableau& rhs) {
  if (lhs.shape() != rhs.shape()) return false;
  const Shape shape = lhs.shape();
  const auto a = lhs.cells();
  const auto b = rhs.cells();
  for (int i = 1; i <= shape.rows; ++i) {
    const bool full_row = i == 1 || i == shape.rows;
    for (int j = 1; j <= shape.cols; j += (full_row || shape.cols == 1) ? 1 : shape.cols - 1) {
      const auto k = cell_index(shape, {i, j});
      if (a[k] != b[k]) return false;
    }
  }
  return true;
}

bool Ribbon::is_short() const {
  std::vector<std::pair<int, int>> rows;
  std::vector<std::pair<int, int>> cols;
  auto bump = [](std::vector<std::pair<int, int>>& counts, int key) {
    for (auto& [k, n] : counts) {
      if (k == key) return ++n;
    }
    counts.emplace_back(key, 1);
    return 1;
  };
  for (Box box : boxes) {
    if (bump(rows, box.row) > 2 || bump(cols, box.col) > 2) return false;
  }
  return true;
}

std::vector<Ribbon> ribbon_components(Shape shape, std::span<const std::uint8_t> cells, int u,
                                      int v) {
  if (u == v) throw std::invalid_argument("ribbon_components needs two distinct labels");
  auto member = [&](std::size_t k) { return cells[k] == u || cells[k] == v; };

  std::vector<char> seen(cells.size(), 0);
  std::vector<Ribbon> out;
  std::deque<std::size_t> frontier;
  for (std::size_t start = 0; start < cells.size(); ++start) {
    if (seen[start] || !member(start)) continue;
    Ribbon ribbon;
    seen[start] = 1;
    frontier.push_back(start);
    while (!frontier.empty()) {
      const auto k = frontier.front();
      frontier.pop_front();
      const Box box = box_at(shape, k);
      ribbon.boxes.push_back(box);
      const Box neighbours[] = {{box.row - 1, box.col},
                                {box.row + 1, box.col},
                                {box.row, box.col - 1},
                                {box.row, box.col + 1}};
      for (Box n : neighbours) {
        if (!in_bounds(shape, n)) continue;
        const auto nk = cell_index(shape, n);
        if (!seen[nk] && member(nk)) {
          seen[nk] = 1;
          frontier.push_back(nk);
        }
      }
    }
    std::sort(ribbon.boxes.begin(), ribbon.boxes.end());
    out.push_back(std::move(ribbon));
  }
  return out;
}

std::vector<Ribbon> ribbon_components(const IncreasingTableau& t, int u, int v) {
  return ribbon_components(t.shape(), t.cells(), u, v);
}

}  // namespace planedyn
