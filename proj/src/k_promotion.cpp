#include "planedyn/k_promotion.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace planedyn {

namespace {

struct NoTrace {
  void ribbon(std::span<const int> /*component*/) {}
};

class TraceRecorder {
 public:
  TraceRecorder(Shape shape, PromotionTrace& trace) : shape_(shape), trace_(trace) {}

  void begin_stage(int value) { trace_.stages.push_back({value, {}}); }

  void ribbon(std::span<const int> component) {
    Ribbon r;
    for (int k : component) r.boxes.push_back(box_at(shape_, static_cast<std::size_t>(k)));
    std::sort(r.boxes.begin(), r.boxes.end());
    for (std::size_t x = 0; x < r.boxes.size(); ++x) {
      for (std::size_t y = x + 1; y < r.boxes.size(); ++y) {
        const Box p = r.boxes[x];
        const Box s = r.boxes[y];
        if (std::abs(p.row - s.row) + std::abs(p.col - s.col) == 1) {
          trace_.flow_path.emplace_back(p, s);
        }
      }
    }
    trace_.stages.back().ribbons.push_back(std::move(r));
  }

  void finish() {
    auto& fp = trace_.flow_path;
    std::sort(fp.begin(), fp.end());
    fp.erase(std::unique(fp.begin(), fp.end()), fp.end());
    auto& bed = trace_.stream_bed;
    for (const auto& [p, s] : fp) {
      bed.push_back(p);
      bed.push_back(s);
    }
    std::sort(bed.begin(), bed.end());
    bed.erase(std::unique(bed.begin(), bed.end()), bed.end());
    for (auto& stage : trace_.stages) {
      std::sort(stage.ribbons.begin(), stage.ribbons.end(),
                [](const Ribbon& x, const Ribbon& y) { return x.boxes.front() < y.boxes.front(); });
    }
  }

 private:
  Shape shape_;
  PromotionTrace& trace_;
};

}  // namespace

Promoter::Promoter(Shape shape, int q)
    : shape_(shape),
      ceiling_(q),
      stamp_(static_cast<std::size_t>(shape.size()), 0),
      label_start_(static_cast<std::size_t>(q) + 2, 0),
      by_label_(static_cast<std::size_t>(shape.size()), 0) {
  if (q < 1 || q > kMaxCeiling) {
    throw std::invalid_argument("ceiling out of range: " + std::to_string(q));
  }
}

void Promoter::bucket_labels(std::span<const std::uint8_t> cells) {
  std::fill(label_start_.begin(), label_start_.end(), 0);
  for (auto v : cells) ++label_start_[v + 1u];
  for (std::size_t v = 1; v < label_start_.size(); ++v) label_start_[v] += label_start_[v - 1];
  // Row-major within each label.
  std::vector<int>& fill = next_ones_;
  fill.assign(label_start_.begin(), label_start_.end());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    by_label_[static_cast<std::size_t>(fill[cells[k]]++)] = static_cast<int>(k);
  }
  ones_.clear();
  for (int i = label_start_[1]; i < label_start_[2]; ++i) ones_.push_back(by_label_[static_cast<std::size_t>(i)]);
}

// Swaps 1 <-> value inside every nontrivial component of the {1, value}
// boxes, then updates ones_ to the new 1-labeled boxes.
template <class Observer>
void Promoter::swap_stage(std::span<std::uint8_t> cells, int value, Observer& observer) {
  const int begin = label_start_[static_cast<std::size_t>(value)];
  const int end = label_start_[static_cast<std::size_t>(value) + 1];
  if (begin == end || ones_.empty()) return;

  if (epoch_ >= (1u << 30)) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 0;
  }
  ++epoch_;
  const std::uint32_t member = 2 * epoch_;
  const std::uint32_t visited = 2 * epoch_ + 1;
  for (int k : ones_) stamp_[static_cast<std::size_t>(k)] = member;
  for (int i = begin; i < end; ++i) stamp_[static_cast<std::size_t>(by_label_[static_cast<std::size_t>(i)])] = member;

  const int cols = shape_.cols;
  const int n = shape_.size();
  next_ones_.clear();
  auto explore = [&](int start) {
    if (stamp_[static_cast<std::size_t>(start)] != member) return;
    component_.clear();
    queue_.clear();
    queue_.push_back(start);
    stamp_[static_cast<std::size_t>(start)] = visited;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int k = queue_[head];
      component_.push_back(k);
      const int col = k % cols;
      const int nbrs[4] = {k - cols, k + cols, col > 0 ? k - 1 : -1, col + 1 < cols ? k + 1 : -1};
      for (int nk : nbrs) {
        if (nk >= 0 && nk < n && stamp_[static_cast<std::size_t>(nk)] == member) {
          stamp_[static_cast<std::size_t>(nk)] = visited;
          queue_.push_back(nk);
        }
      }
    }
    if (component_.size() == 1) {
      if (cells[static_cast<std::size_t>(start)] == 1) next_ones_.push_back(start);
      return;
    }
    bool has_one = false;
    bool has_value = false;
    for (int k : component_) {
      const bool one = cells[static_cast<std::size_t>(k)] == 1;
      has_one |= one;
      has_value |= !one;
    }
    if (!has_one || !has_value) {
      throw std::logic_error("promotion stage produced a component without both labels");
    }
    for (int k : component_) {
      auto& cell = cells[static_cast<std::size_t>(k)];
      if (cell == 1) {
        cell = static_cast<std::uint8_t>(value);
      } else {
        cell = 1;
        next_ones_.push_back(k);
      }
    }
    observer.ribbon(component_);
  };
  for (int k : ones_) explore(k);
  // v-boxes not adjacent to any 1 are trivial; nothing to do for them.
  std::swap(ones_, next_ones_);
}

void Promoter::promote(std::span<std::uint8_t> cells) {
  NoTrace observer;
  if (cells[0] == 1) {
    bucket_labels(cells);
    for (int v = 2; v <= ceiling_; ++v) swap_stage(cells, v, observer);
  }
  const auto q = static_cast<std::uint8_t>(ceiling_);
  for (auto& cell : cells) cell = cell == 1 ? q : static_cast<std::uint8_t>(cell - 1);
}

void Promoter::promote(std::span<std::uint8_t> cells, PromotionTrace& trace) {
  trace = {};
  TraceRecorder recorder(shape_, trace);
  const bool active = cells[0] == 1;
  if (active) bucket_labels(cells);
  for (int v = 2; v <= ceiling_; ++v) {
    recorder.begin_stage(v);
    if (active) swap_stage(cells, v, recorder);
  }
  recorder.finish();
  const auto q = static_cast<std::uint8_t>(ceiling_);
  for (auto& cell : cells) cell = cell == 1 ? q : static_cast<std::uint8_t>(cell - 1);
}

void Promoter::demote(std::span<std::uint8_t> cells) {
  const auto q = static_cast<std::uint8_t>(ceiling_);
  bool any_one = false;
  for (auto& cell : cells) {
    cell = cell == q ? 1 : static_cast<std::uint8_t>(cell + 1);
    any_one |= cell == 1;
  }
  if (!any_one) return;
  NoTrace observer;
  bucket_labels(cells);
  for (int v = ceiling_; v >= 2; --v) swap_stage(cells, v, observer);
}

namespace {

void require_valid(const IncreasingTableau& t) {
  auto check = validate_increasing(t.rows(), t.ceiling());
  if (!check.ok()) throw InvalidTableau("input is not an increasing tableau", check.violations);
}

}  // namespace

IncreasingTableau promote(const IncreasingTableau& t) {
  require_valid(t);
  std::vector<std::uint8_t> cells(t.cells().begin(), t.cells().end());
  Promoter(t.shape(), t.ceiling()).promote(cells);
  return IncreasingTableau::from_trusted(t.shape(), t.ceiling(), std::move(cells));
}

std::pair<IncreasingTableau, PromotionTrace> promote_with_trace(const IncreasingTableau& t) {
  require_valid(t);
  std::vector<std::uint8_t> cells(t.cells().begin(), t.cells().end());
  PromotionTrace trace;
  Promoter(t.shape(), t.ceiling()).promote(cells, trace);
  return {IncreasingTableau::from_trusted(t.shape(), t.ceiling(), std::move(cells)),
          std::move(trace)};
}

IncreasingTableau demote(const IncreasingTableau& t) {
  require_valid(t);
  std::vector<std::uint8_t> cells(t.cells().begin(), t.cells().end());
  Promoter(t.shape(), t.ceiling()).demote(cells);
  return IncreasingTableau::from_trusted(t.shape(), t.ceiling(), std::move(cells));
}

IncreasingTableau promote_power(const IncreasingTableau& t, std::uint64_t m,
                                std::optional<std::uint64_t> orbit_size) {
  require_valid(t);
  if (orbit_size) {
    if (*orbit_size == 0) throw std::invalid_argument("orbit size must be positive");
    m %= *orbit_size;
  }
  std::vector<std::uint8_t> cells(t.cells().begin(), t.cells().end());
  Promoter promoter(t.shape(), t.ceiling());
  for (std::uint64_t i = 0; i < m; ++i) promoter.promote(cells);
  return IncreasingTableau::from_trusted(t.shape(), t.ceiling(), std::move(cells));
}

}  // namespace planedyn
