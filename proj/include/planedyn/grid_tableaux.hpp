#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planedyn {

// Rectangular grid of `rows` x `cols` boxes.
struct Shape {
  int rows = 1;
  int cols = 1;

  Shape() = default;
  Shape(int rows_, int cols_);

  [[nodiscard]] int size() const { return rows * cols; }
  // Ceiling of the minimal tableau, a + b - 1.
  [[nodiscard]] int min_ceiling() const { return rows + cols - 1; }

  friend bool operator==(const Shape&, const Shape&) = default;
};

// 1-based (row, col) position, matrix convention: (1,2) is the second box of
// the top row.
struct Box {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Box&, const Box&) = default;
};

[[nodiscard]] bool in_bounds(Shape shape, Box box);
[[nodiscard]] std::size_t cell_index(Shape shape, Box box);
[[nodiscard]] Box box_at(Shape shape, std::size_t index);

using Grid = std::vector<std::vector<int>>;

enum class Rule { positivity, ceiling, row_increase, column_increase };

[[nodiscard]] const char* to_string(Rule rule);

struct Violation {
  Box box;
  Rule rule;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationResult {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

// Checks membership of `grid` in Inc^q. Throws std::invalid_argument only for
// a ragged or empty grid; rule violations are returned, box-by-box in
// row-major order. Row/column violations are reported at the right/lower box
// of the offending pair.
[[nodiscard]] ValidationResult validate_increasing(const Grid& grid, int q);

class InvalidTableau : public std::invalid_argument {
 public:
  InvalidTableau(const std::string& what, std::vector<Violation> violations)
      : std::invalid_argument(what), violations_(std::move(violations)) {}

  [[nodiscard]] const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

inline constexpr int kMaxCeiling = 255;

// An element of Inc^q(a x b). Entries are stored one byte per box, row-major.
class IncreasingTableau {
 public:
  // Validates; throws InvalidTableau on any violation or if q > kMaxCeiling.
  static IncreasingTableau from_rows(const Grid& rows, int q);

  // For callers that already guarantee validity (promotion, enumeration).
  static IncreasingTableau from_trusted(Shape shape, int q, std::vector<std::uint8_t> cells);

  [[nodiscard]] Shape shape() const { return shape_; }
  [[nodiscard]] int ceiling() const { return ceiling_; }
  [[nodiscard]] int at(Box box) const { return cells_[cell_index(shape_, box)]; }
  [[nodiscard]] int operator()(int row, int col) const { return at({row, col}); }
  [[nodiscard]] std::span<const std::uint8_t> cells() const { return cells_; }
  [[nodiscard]] Grid rows() const;

  friend bool operator==(const IncreasingTableau&, const IncreasingTableau&) = default;

  // Row-major lexicographic on entries; shape and ceiling break ties first.
  friend std::strong_ordering operator<=>(const IncreasingTableau& lhs,
                                          const IncreasingTableau& rhs);

 private:
  IncreasingTableau(Shape shape, int q, std::vector<std::uint8_t> cells)
      : shape_(shape), ceiling_(q), cells_(std::move(cells)) {}

  Shape shape_;
  int ceiling_ = 1;
  std::vector<std::uint8_t> cells_;
};

// M(i,j) = i + j - 1 with ceiling a + b - 1.
[[nodiscard]] IncreasingTableau minimal_tableau(Shape shape);
[[nodiscard]] bool is_minimal(const IncreasingTableau& t);

// Boxes in the first/last row or first/last column, row-major.
[[nodiscard]] std::vector<Box> frame_boxes(Shape shape);

class Frame {
 public:
  Frame(Shape shape, std::vector<std::pair<Box, int>> entries)
      : shape_(shape), entries_(std::move(entries)) {}

  [[nodiscard]] Shape shape() const { return shape_; }
  [[nodiscard]] const std::vector<std::pair<Box, int>>& entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  Shape shape_;
  std::vector<std::pair<Box, int>> entries_;
};

[[nodiscard]] Frame frame_of(const IncreasingTableau& t);
// Compares border entries without materializing frames.
[[nodiscard]] bool same_frame(const IncreasingTableau& lhs, const IncreasingTableau& rhs);

// An edge-connected set of boxes, row-major.
struct Ribbon {
  std::vector<Box> boxes;

  [[nodiscard]] bool trivial() const { return boxes.size() == 1; }
  // At most two boxes in any row and in any column.
  [[nodiscard]] bool is_short() const;

  friend bool operator==(const Ribbon&, const Ribbon&) = default;
};

// Edge-connected components of the boxes labeled u or v, ordered by their
// first box. Components that are not short ribbons are returned as-is; check
// Ribbon::is_short.
[[nodiscard]] std::vector<Ribbon> ribbon_components(const IncreasingTableau& t, int u, int v);

// Same decomposition over an arbitrary labeling (e.g. a mid-promotion grid).
[[nodiscard]] std::vector<Ribbon> ribbon_components(Shape shape,
                                                    std::span<const std::uint8_t> cells, int u,
                                                    int v);

}  // namespace planedyn
