#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "planedyn/grid_tableaux.hpp"

namespace planedyn {

// Unordered pair of edge-adjacent boxes, stored with first < second.
using BoxPair = std::pair<Box, Box>;

struct PromotionStage {
  int value = 0;                // the label swapped against 1 at this stage
  std::vector<Ribbon> ribbons;  // nontrivial ribbons only
};

// Record of one K-promotion: the flow path, its stream-bed, and one stage per
// value 2..q. Sets are sorted row-major.
struct PromotionTrace {
  std::vector<BoxPair> flow_path;
  std::vector<Box> stream_bed;
  std::vector<PromotionStage> stages;
};

// Reusable scratch space for in-place promotion of packed row-major cells.
// One instance per thread; not safe to share.
class Promoter {
 public:
  Promoter(Shape shape, int q);

  [[nodiscard]] Shape shape() const { return shape_; }
  [[nodiscard]] int ceiling() const { return ceiling_; }

  // Cells must hold a valid element of Inc^q(shape).
  void promote(std::span<std::uint8_t> cells);
  void demote(std::span<std::uint8_t> cells);
  void promote(std::span<std::uint8_t> cells, PromotionTrace& trace);

 private:
  template <class Observer>
  void swap_stage(std::span<std::uint8_t> cells, int value, Observer& observer);
  void bucket_labels(std::span<const std::uint8_t> cells);

  Shape shape_;
  int ceiling_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<int> ones_;
  std::vector<int> next_ones_;
  std::vector<int> queue_;
  std::vector<int> component_;
  // Boxes by label, filled once per call: label_start_[v]..label_start_[v+1].
  std::vector<int> label_start_;
  std::vector<int> by_label_;
};

[[nodiscard]] IncreasingTableau promote(const IncreasingTableau& t);
[[nodiscard]] std::pair<IncreasingTableau, PromotionTrace> promote_with_trace(
    const IncreasingTableau& t);
[[nodiscard]] IncreasingTableau demote(const IncreasingTableau& t);

// Psi^m(t). If the orbit size is known, m is reduced modulo it first.
[[nodiscard]] IncreasingTableau promote_power(const IncreasingTableau& t, std::uint64_t m,
                                              std::optional<std::uint64_t> orbit_size = {});

}  // namespace planedyn
