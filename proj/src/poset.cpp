#include "planedyn/poset.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>

#include <boost/functional/hash.hpp>

namespace planedyn {

FinitePoset::FinitePoset(int size, std::vector<Cover> covers)
    : size_(size), covers_(std::move(covers)) {
  if (size_ < 0) throw std::invalid_argument("poset size must be non-negative");
  const auto n = static_cast<std::size_t>(size_);
  lower_.resize(n);
  upper_.resize(n);
  std::sort(covers_.begin(), covers_.end());
  if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end()) {
    throw std::invalid_argument("duplicate cover relation");
  }
  for (const auto& [lo, hi] : covers_) {
    if (lo < 0 || hi < 0 || lo >= size_ || hi >= size_) {
      throw std::invalid_argument("cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                                  ") out of range");
    }
    if (lo == hi) throw std::invalid_argument("cover relation is reflexive at " + std::to_string(lo));
    upper_[static_cast<std::size_t>(lo)].push_back(hi);
    lower_[static_cast<std::size_t>(hi)].push_back(lo);
  }

  // Kahn's algorithm; smallest available index first for a stable order.
  std::vector<int> indegree(n);
  for (std::size_t x = 0; x < n; ++x) indegree[x] = static_cast<int>(lower_[x].size());
  std::vector<int> ready;
  for (int x = size_ - 1; x >= 0; --x) {
    if (indegree[static_cast<std::size_t>(x)] == 0) ready.push_back(x);
  }
  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), std::greater<>{});
    const int x = ready.back();
    ready.pop_back();
    linear_.push_back(x);
    for (int y : upper_[static_cast<std::size_t>(x)]) {
      if (--indegree[static_cast<std::size_t>(y)] == 0) {
        ready.push_back(y);
        std::push_heap(ready.begin(), ready.end(), std::greater<>{});
      }
    }
  }
  if (linear_.size() != n) throw std::invalid_argument("cover relation contains a cycle");

  down_.assign(n, Bits(n));
  up_.assign(n, Bits(n));
  for (int x : linear_) {
    auto& d = down_[static_cast<std::size_t>(x)];
    d.set(static_cast<std::size_t>(x));
    for (int y : lower_[static_cast<std::size_t>(x)]) d |= down_[static_cast<std::size_t>(y)];
  }
  for (auto it = linear_.rbegin(); it != linear_.rend(); ++it) {
    auto& u = up_[static_cast<std::size_t>(*it)];
    u.set(static_cast<std::size_t>(*it));
    for (int y : upper_[static_cast<std::size_t>(*it)]) u |= up_[static_cast<std::size_t>(y)];
  }

  for (const auto& [lo, hi] : covers_) {
    for (int mid : upper_[static_cast<std::size_t>(lo)]) {
      if (mid != hi && up_[static_cast<std::size_t>(mid)].test(static_cast<std::size_t>(hi))) {
        throw std::invalid_argument("cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                                    ") is implied by others; covers must be transitively reduced");
      }
    }
  }
}

FinitePoset parse_cover_list(std::istream& in, std::optional<int> size) {
  std::vector<FinitePoset::Cover> covers;
  int largest = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long lo = 0;
    long long hi = 0;
    if (!(fields >> lo)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected two integers");
    }
    std::string extra;
    if (!(fields >> hi) || (fields >> extra) || lo < 0 || hi < 0 || lo > 1'000'000 || hi > 1'000'000) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected two non-negative integers");
    }
    covers.emplace_back(static_cast<int>(lo), static_cast<int>(hi));
    largest = std::max({largest, static_cast<int>(lo), static_cast<int>(hi)});
  }
  return {size.value_or(largest + 1), std::move(covers)};
}

FinitePoset chain_poset(int n) {
  std::vector<FinitePoset::Cover> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return {n, std::move(covers)};
}

int box_element(BoxDims dims, int i, int j, int k) {
  return ((i - 1) * dims.b + (j - 1)) * dims.c + (k - 1);
}

FinitePoset box_poset(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("box dimensions must be positive");
  const BoxDims dims{a, b, c};
  std::vector<FinitePoset::Cover> covers;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      for (int k = 1; k <= c; ++k) {
        const int x = box_element(dims, i, j, k);
        if (i < a) covers.emplace_back(x, box_element(dims, i + 1, j, k));
        if (j < b) covers.emplace_back(x, box_element(dims, i, j + 1, k));
        if (k < c) covers.emplace_back(x, box_element(dims, i, j, k + 1));
      }
    }
  }
  FinitePoset poset(a * b * c, std::move(covers));
  poset.box_ = dims;
  return poset;
}

OrderIdeal OrderIdeal::empty(const FinitePoset& poset) {
  return OrderIdeal(Bits(static_cast<std::size_t>(poset.size())));
}

OrderIdeal OrderIdeal::full(const FinitePoset& poset) {
  Bits all(static_cast<std::size_t>(poset.size()));
  all.set();
  return OrderIdeal(std::move(all));
}

OrderIdeal OrderIdeal::generated_by(const FinitePoset& poset, const std::vector<int>& generators) {
  Bits members(static_cast<std::size_t>(poset.size()));
  for (int g : generators) members |= poset.down_set(g);
  return OrderIdeal(std::move(members));
}

std::size_t OrderIdealHash::operator()(const OrderIdeal& ideal) const {
  std::size_t seed = ideal.members().size();
  std::vector<std::uint64_t> blocks;
  boost::to_block_range(ideal.members(), std::back_inserter(blocks));
  boost::hash_range(seed, blocks.begin(), blocks.end());
  return seed;
}

bool is_order_ideal(const FinitePoset& poset, const Bits& members) {
  if (members.size() != static_cast<std::size_t>(poset.size())) return false;
  for (const auto& [lo, hi] : poset.covers()) {
    if (members.test(static_cast<std::size_t>(hi)) && !members.test(static_cast<std::size_t>(lo))) {
      return false;
    }
  }
  return true;
}

namespace {

void require_ideal(const FinitePoset& poset, const OrderIdeal& ideal) {
  if (!is_order_ideal(poset, ideal.members())) throw NotAnIdeal("set is not an order ideal of the poset");
}

}  // namespace

OrderIdeal rowmotion(const FinitePoset& poset, const OrderIdeal& ideal) {
  require_ideal(poset, ideal);
  Bits out(static_cast<std::size_t>(poset.size()));
  for (int x = 0; x < poset.size(); ++x) {
    if (ideal.contains(x)) continue;
    const auto& lower = poset.lower_covers(x);
    if (std::all_of(lower.begin(), lower.end(), [&](int y) { return ideal.contains(y); })) {
      out |= poset.down_set(x);
    }
  }
  return OrderIdeal(std::move(out));
}

OrderIdeal inverse_rowmotion(const FinitePoset& poset, const OrderIdeal& ideal) {
  require_ideal(poset, ideal);
  Bits filter(static_cast<std::size_t>(poset.size()));
  for (int x = 0; x < poset.size(); ++x) {
    if (!ideal.contains(x)) continue;
    const auto& upper = poset.upper_covers(x);
    if (std::none_of(upper.begin(), upper.end(), [&](int y) { return ideal.contains(y); })) {
      filter |= poset.up_set(x);
    }
  }
  return OrderIdeal(~filter);
}

OrderIdeal toggle(const FinitePoset& poset, const OrderIdeal& ideal, int x) {
  require_ideal(poset, ideal);
  Bits members = ideal.members();
  const auto ux = static_cast<std::size_t>(x);
  if (members.test(ux)) {
    const auto& upper = poset.upper_covers(x);
    if (std::none_of(upper.begin(), upper.end(), [&](int y) { return ideal.contains(y); })) {
      members.reset(ux);
    }
  } else {
    const auto& lower = poset.lower_covers(x);
    if (std::all_of(lower.begin(), lower.end(), [&](int y) { return ideal.contains(y); })) {
      members.set(ux);
    }
  }
  return OrderIdeal(std::move(members));
}

void for_each_ideal(const FinitePoset& poset,
                    const std::function<void(const OrderIdeal&)>& visit) {
  if (const auto& dims = poset.box_dims()) {
    for_each_plane_partition(*dims, [&](const PlanePartition& pp) {
      visit(plane_partition_to_ideal(poset, pp));
    });
    return;
  }
  const auto& order = poset.linear_extension();
  Bits members(static_cast<std::size_t>(poset.size()));
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == order.size()) {
      visit(OrderIdeal(members));
      return;
    }
    const int x = order[pos];
    rec(pos + 1);
    const auto& lower = poset.lower_covers(x);
    if (std::all_of(lower.begin(), lower.end(),
                    [&](int y) { return members.test(static_cast<std::size_t>(y)); })) {
      members.set(static_cast<std::size_t>(x));
      rec(pos + 1);
      members.reset(static_cast<std::size_t>(x));
    }
  };
  rec(0);
}

std::vector<OrderIdeal> enumerate_ideals(const FinitePoset& poset) {
  std::vector<OrderIdeal> out;
  for_each_ideal(poset, [&](const OrderIdeal& ideal) { out.push_back(ideal); });
  return out;
}

std::vector<std::uint64_t> rowmotion_orbit_sizes(const FinitePoset& poset) {
  absl::flat_hash_set<OrderIdeal, OrderIdealHash> seen;
  std::vector<std::uint64_t> sizes;
  for_each_ideal(poset, [&](const OrderIdeal& seed) {
    if (seen.contains(seed)) return;
    std::uint64_t k = 0;
    OrderIdeal cur = seed;
    do {
      seen.insert(cur);
      cur = rowmotion(poset, cur);
      ++k;
    } while (!(cur == seed));
    sizes.push_back(k);
  });
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

PlanePartition::PlanePartition(BoxDims dims, std::vector<int> heights)
    : dims_(dims), heights_(std::move(heights)) {
  if (dims.a < 1 || dims.b < 1 || dims.c < 0) {
    throw std::invalid_argument("plane partition box must have a, b >= 1 and c >= 0");
  }
  if (heights_.size() != static_cast<std::size_t>(dims.a * dims.b)) {
    throw std::invalid_argument("heights grid does not match the box footprint");
  }
  for (int i = 1; i <= dims.a; ++i) {
    for (int j = 1; j <= dims.b; ++j) {
      const int h = height(i, j);
      if (h < 0 || h > dims.c) throw std::invalid_argument("height out of range 0..c");
      if ((i > 1 && height(i - 1, j) < h) || (j > 1 && height(i, j - 1) < h)) {
        throw std::invalid_argument("heights must weakly decrease along rows and columns");
      }
    }
  }
}

PlanePartition PlanePartition::from_rows(BoxDims dims, const std::vector<std::vector<int>>& rows) {
  std::vector<int> heights;
  if (rows.size() != static_cast<std::size_t>(dims.a)) {
    throw std::invalid_argument("heights grid does not match the box footprint");
  }
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(dims.b)) {
      throw std::invalid_argument("heights grid does not match the box footprint");
    }
    heights.insert(heights.end(), row.begin(), row.end());
  }
  return {dims, std::move(heights)};
}

PlanePartition PlanePartition::empty(BoxDims dims) {
  return {dims, std::vector<int>(static_cast<std::size_t>(std::max(dims.a * dims.b, 0)), 0)};
}

std::vector<std::vector<int>> PlanePartition::rows() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < dims_.a; ++i) {
    out.emplace_back(heights_.begin() + i * dims_.b, heights_.begin() + (i + 1) * dims_.b);
  }
  return out;
}

PlanePartition ideal_to_plane_partition(const FinitePoset& box, const OrderIdeal& ideal) {
  if (!box.box_dims()) throw std::invalid_argument("poset is not a box poset");
  require_ideal(box, ideal);
  const BoxDims dims = *box.box_dims();
  std::vector<int> heights;
  for (int i = 1; i <= dims.a; ++i) {
    for (int j = 1; j <= dims.b; ++j) {
      int h = 0;
      while (h < dims.c && ideal.contains(box_element(dims, i, j, h + 1))) ++h;
      heights.push_back(h);
    }
  }
  return {dims, std::move(heights)};
}

OrderIdeal plane_partition_to_ideal(const FinitePoset& box, const PlanePartition& pp) {
  if (!box.box_dims() || !(*box.box_dims() == pp.dims())) {
    throw std::invalid_argument("plane partition does not fit the box poset");
  }
  const BoxDims dims = pp.dims();
  Bits members(static_cast<std::size_t>(box.size()));
  for (int i = 1; i <= dims.a; ++i) {
    for (int j = 1; j <= dims.b; ++j) {
      for (int k = 1; k <= pp.height(i, j); ++k) {
        members.set(static_cast<std::size_t>(box_element(dims, i, j, k)));
      }
    }
  }
  return OrderIdeal(std::move(members));
}

void for_each_plane_partition(BoxDims dims,
                              const std::function<void(const PlanePartition&)>& visit) {
  if (dims.a < 1 || dims.b < 1 || dims.c < 0) throw std::invalid_argument("invalid box dimensions");
  const int n = dims.a * dims.b;
  std::vector<int> h(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      visit(PlanePartition(dims, h));
      return;
    }
    const int i = k / dims.b;
    const int j = k % dims.b;
    int hi = dims.c;
    if (i > 0) hi = std::min(hi, h[static_cast<std::size_t>(k - dims.b)]);
    if (j > 0) hi = std::min(hi, h[static_cast<std::size_t>(k - 1)]);
    for (int x = 0; x <= hi; ++x) {
      h[static_cast<std::size_t>(k)] = x;
      rec(k + 1);
    }
  };
  rec(0);
}

}  // namespace planedyn
