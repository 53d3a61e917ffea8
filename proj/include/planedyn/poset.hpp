#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace planedyn {

using Bits = boost::dynamic_bitset<std::uint64_t>;

struct BoxDims {
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const BoxDims&, const BoxDims&) = default;
};

// A finite poset on elements 0..n-1 given by its cover relations. Each
// element carries its (inclusive) down-set and up-set as packed bit vectors.
class FinitePoset {
 public:
  using Cover = std::pair<int, int>;  // (lower, upper)

  // Throws std::invalid_argument unless the covers are in range, acyclic,
  // duplicate-free and transitively reduced.
  FinitePoset(int size, std::vector<Cover> covers);

  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] const std::vector<Cover>& covers() const { return covers_; }
  [[nodiscard]] const std::vector<int>& lower_covers(int x) const { return lower_[static_cast<std::size_t>(x)]; }
  [[nodiscard]] const std::vector<int>& upper_covers(int x) const { return upper_[static_cast<std::size_t>(x)]; }
  [[nodiscard]] const Bits& down_set(int x) const { return down_[static_cast<std::size_t>(x)]; }
  [[nodiscard]] const Bits& up_set(int x) const { return up_[static_cast<std::size_t>(x)]; }
  [[nodiscard]] bool less_equal(int x, int y) const { return down_[static_cast<std::size_t>(y)].test(static_cast<std::size_t>(x)); }
  // Elements listed bottom-up (a linear extension).
  [[nodiscard]] const std::vector<int>& linear_extension() const { return linear_; }

  [[nodiscard]] const std::optional<BoxDims>& box_dims() const { return box_; }

 private:
  friend FinitePoset box_poset(int a, int b, int c);

  int size_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
  std::vector<Bits> down_;
  std::vector<Bits> up_;
  std::vector<int> linear_;
  std::optional<BoxDims> box_;
};

// Reads one "lower upper" pair per line; blank lines and '#' comments are
// skipped. The element count is one more than the largest index seen, or
// `size` if given.
[[nodiscard]] FinitePoset parse_cover_list(std::istream& in, std::optional<int> size = {});

[[nodiscard]] FinitePoset chain_poset(int n);

// The product of chains [1,a] x [1,b] x [1,c]. Element (i,j,k) has index
// ((i-1)*b + (j-1))*c + (k-1).
[[nodiscard]] FinitePoset box_poset(int a, int b, int c);
[[nodiscard]] int box_element(BoxDims dims, int i, int j, int k);

class OrderIdeal {
 public:
  OrderIdeal() = default;
  explicit OrderIdeal(Bits members) : members_(std::move(members)) {}

  static OrderIdeal empty(const FinitePoset& poset);
  static OrderIdeal full(const FinitePoset& poset);
  // Down-closure of the given elements.
  static OrderIdeal generated_by(const FinitePoset& poset, const std::vector<int>& generators);

  [[nodiscard]] bool contains(int x) const { return members_.test(static_cast<std::size_t>(x)); }
  [[nodiscard]] std::size_t cardinality() const { return members_.count(); }
  [[nodiscard]] const Bits& members() const { return members_; }

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;

 private:
  Bits members_;
};

struct OrderIdealHash {
  std::size_t operator()(const OrderIdeal& ideal) const;
};

[[nodiscard]] bool is_order_ideal(const FinitePoset& poset, const Bits& members);

class NotAnIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The ideal generated by the minimal elements of the complement.
[[nodiscard]] OrderIdeal rowmotion(const FinitePoset& poset, const OrderIdeal& ideal);
// Complement of the up-closure of the maximal elements.
[[nodiscard]] OrderIdeal inverse_rowmotion(const FinitePoset& poset, const OrderIdeal& ideal);
// Adds x if every lower cover is present, removes it if no upper cover is;
// otherwise returns the ideal unchanged.
[[nodiscard]] OrderIdeal toggle(const FinitePoset& poset, const OrderIdeal& ideal, int x);

// Every ideal once, in a deterministic order. Box posets are walked as plane
// partitions with row-major lexicographic heights; other posets by
// include/exclude recursion along the linear extension.
void for_each_ideal(const FinitePoset& poset, const std::function<void(const OrderIdeal&)>& visit);
[[nodiscard]] std::vector<OrderIdeal> enumerate_ideals(const FinitePoset& poset);

// Sorted orbit sizes of rowmotion on J(poset).
[[nodiscard]] std::vector<std::uint64_t> rowmotion_orbit_sizes(const FinitePoset& poset);

// Heights grid of an a x b x c box, row-major, weakly decreasing along rows
// and columns with entries in 0..c. c = 0 is the degenerate empty box.
class PlanePartition {
 public:
  PlanePartition(BoxDims dims, std::vector<int> heights);
  static PlanePartition from_rows(BoxDims dims, const std::vector<std::vector<int>>& rows);
  static PlanePartition empty(BoxDims dims);

  [[nodiscard]] BoxDims dims() const { return dims_; }
  [[nodiscard]] int height(int i, int j) const { return heights_[static_cast<std::size_t>((i - 1) * dims_.b + (j - 1))]; }
  [[nodiscard]] const std::vector<int>& heights() const { return heights_; }
  [[nodiscard]] std::vector<std::vector<int>> rows() const;

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;

 private:
  BoxDims dims_;
  std::vector<int> heights_;
};

// Both directions require `box` to come from box_poset and reject non-ideals.
[[nodiscard]] PlanePartition ideal_to_plane_partition(const FinitePoset& box, const OrderIdeal& ideal);
[[nodiscard]] OrderIdeal plane_partition_to_ideal(const FinitePoset& box, const PlanePartition& pp);

// Row-major backtracking over heights.
void for_each_plane_partition(BoxDims dims, const std::function<void(const PlanePartition&)>& visit);

}  // namespace planedyn
