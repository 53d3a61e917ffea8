#include "planedyn/orbit_engine.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

#include "planedyn/correspondence.hpp"
#include "planedyn/k_promotion.hpp"

namespace planedyn {

namespace {

void check_dims(int a, int b, int q) {
  if (a < 1 || b < 1) throw std::invalid_argument("shape dimensions must be positive");
  if (q > kMaxCeiling) throw std::invalid_argument("ceiling exceeds " + std::to_string(kMaxCeiling));
}

// Row-major backtracking from cell `start` on; cells before `start` are fixed.
class Filler {
 public:
  Filler(int a, int b, int q, std::function<void(std::span<const std::uint8_t>)> visit)
      : a_(a), b_(b), q_(q), visit_(std::move(visit)), cells_(static_cast<std::size_t>(a * b)) {}

  std::vector<std::uint8_t>& cells() { return cells_; }

  void run(int k) {
    if (k == a_ * b_) {
      visit_(cells_);
      return;
    }
    const int i = k / b_;  // 0-based
    const int j = k % b_;
    int lo = i + j + 1;
    if (j > 0) lo = std::max(lo, cells_[static_cast<std::size_t>(k - 1)] + 1);
    if (i > 0) lo = std::max(lo, cells_[static_cast<std::size_t>(k - b_)] + 1);
    const int hi = q_ - (a_ - 1 - i) - (b_ - 1 - j);
    for (int x = lo; x <= hi; ++x) {
      cells_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(x);
      run(k + 1);
    }
  }

 private:
  int a_, b_, q_;
  std::function<void(std::span<const std::uint8_t>)> visit_;
  std::vector<std::uint8_t> cells_;
};

}  // namespace

void for_each_tableau(int a, int b, int q,
                      const std::function<void(std::span<const std::uint8_t>)>& visit) {
  check_dims(a, b, q);
  if (q < a + b - 1) return;
  Filler(a, b, q, visit).run(0);
}

std::vector<IncreasingTableau> enumerate_tableaux(int a, int b, int q) {
  std::vector<IncreasingTableau> out;
  for_each_tableau(a, b, q, [&](std::span<const std::uint8_t> cells) {
    out.push_back(IncreasingTableau::from_trusted({a, b}, q, {cells.begin(), cells.end()}));
  });
  return out;
}

std::uint64_t count_tableaux(int a, int b, int q) {
  std::uint64_t n = 0;
  for_each_tableau(a, b, q, [&](std::span<const std::uint8_t>) { ++n; });
  return n;
}

Orbit orbit_of(const IncreasingTableau& t, bool keep_members) {
  if (!validate_increasing(t.rows(), t.ceiling()).ok()) {
    throw InvalidTableau("orbit_of needs an increasing tableau", {});
  }
  Promoter promoter(t.shape(), t.ceiling());
  std::vector<std::uint8_t> cur(t.cells().begin(), t.cells().end());
  std::vector<std::uint8_t> best = cur;
  std::vector<std::vector<std::uint8_t>> members;
  std::uint64_t k = 0;
  do {
    if (keep_members) members.push_back(cur);
    if (cur < best) best = cur;
    promoter.promote(cur);
    ++k;
    const auto check = validate_increasing(
        IncreasingTableau::from_trusted(t.shape(), t.ceiling(), cur).rows(), t.ceiling());
    if (!check.ok()) throw std::logic_error("promotion left Inc^q; this is a promotion bug");
  } while (!std::equal(cur.begin(), cur.end(), t.cells().begin(), t.cells().end()));

  Orbit orbit{IncreasingTableau::from_trusted(t.shape(), t.ceiling(), best), k, {}};
  if (keep_members) {
    // rotate so the listing starts at the representative
    const auto start = std::find(members.begin(), members.end(), best);
    std::rotate(members.begin(), start, members.end());
    for (auto& m : members) {
      orbit.members.push_back(IncreasingTableau::from_trusted(t.shape(), t.ceiling(), std::move(m)));
    }
  }
  return orbit;
}

std::map<std::uint64_t, std::uint64_t> OrbitDecomposition::size_histogram() const {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& orbit : orbits) ++out[orbit.size];
  return out;
}

namespace {

// States packed into one word, first cell in the most significant bits so
// that numeric order is row-major lexicographic order.
struct WordCodec {
  using Key = std::uint64_t;
  int bits;

  Key encode(std::span<const std::uint8_t> cells) const {
    Key key = 0;
    for (auto c : cells) key = (key << bits) | c;
    return key;
  }
  void decode(Key key, std::span<std::uint8_t> cells) const {
    const Key mask = (Key{1} << bits) - 1;
    for (std::size_t k = cells.size(); k-- > 0;) {
      cells[k] = static_cast<std::uint8_t>(key & mask);
      key >>= bits;
    }
  }
};

struct BytesCodec {
  using Key = std::string;

  Key encode(std::span<const std::uint8_t> cells) const {
    return {reinterpret_cast<const char*>(cells.data()), cells.size()};
  }
  void decode(const Key& key, std::span<std::uint8_t> cells) const {
    std::copy(key.begin(), key.end(), reinterpret_cast<char*>(cells.data()));
  }
};

template <class Key>
class VisitedSet {
 public:
  explicit VisitedSet(bool concurrent) : concurrent_(concurrent), shards_(concurrent ? 64 : 1) {}

  bool contains(const Key& key) {
    auto& shard = shard_for(key);
    if (!concurrent_) return shard.set.contains(key);
    std::lock_guard lock(shard.mutex);
    return shard.set.contains(key);
  }

  bool insert(const Key& key) {
    auto& shard = shard_for(key);
    if (!concurrent_) return shard.set.insert(key).second;
    std::lock_guard lock(shard.mutex);
    return shard.set.insert(key).second;
  }

 private:
  struct Shard {
    std::mutex mutex;
    absl::flat_hash_set<Key> set;
  };

  Shard& shard_for(const Key& key) {
    if (!concurrent_) return shards_.front();
    return shards_[absl::Hash<Key>{}(key) % shards_.size()];
  }

  bool concurrent_;
  std::vector<Shard> shards_;
};

template <class Codec>
OrbitDecomposition run_decomposition(int a, int b, int q, const DecomposeOptions& options,
                                     const Codec& codec) {
  using Key = typename Codec::Key;
  const Shape shape(a, b);
  const unsigned workers = std::max(1u, options.workers);

  // Work units: every valid first row.
  std::vector<std::vector<std::uint8_t>> prefixes;
  for_each_tableau(1, b, q - (a - 1), [&](std::span<const std::uint8_t> row) {
    prefixes.emplace_back(row.begin(), row.end());
  });

  VisitedSet<Key> visited(workers > 1);
  std::atomic<std::size_t> next_prefix{0};
  std::atomic<std::uint64_t> total{0};
  std::vector<std::vector<Orbit>> found(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](unsigned id) {
    try {
      Promoter promoter(shape, q);
      std::vector<std::uint8_t> cur;
      std::vector<Key> keys;
      std::uint64_t seen = 0;
      auto on_seed = [&](std::span<const std::uint8_t> seed) {
        ++seen;
        const Key seed_key = codec.encode(seed);
        if (visited.contains(seed_key)) return;
        keys.clear();
        cur.assign(seed.begin(), seed.end());
        do {
          keys.push_back(codec.encode(cur));
          promoter.promote(cur);
        } while (!std::equal(cur.begin(), cur.end(), seed.begin(), seed.end()));

        const auto rep = std::min_element(keys.begin(), keys.end());
        if (!visited.insert(*rep)) return;  // another worker owns this orbit
        for (const Key& key : keys) {
          if (key != *rep) visited.insert(key);
        }
        std::vector<std::uint8_t> rep_cells(static_cast<std::size_t>(shape.size()));
        codec.decode(*rep, rep_cells);
        Orbit orbit{IncreasingTableau::from_trusted(shape, q, std::move(rep_cells)), keys.size(), {}};
        if (options.keep_members) {
          std::rotate(keys.begin(), rep, keys.end());
          for (const Key& key : keys) {
            std::vector<std::uint8_t> m(static_cast<std::size_t>(shape.size()));
            codec.decode(key, m);
            orbit.members.push_back(IncreasingTableau::from_trusted(shape, q, std::move(m)));
          }
        }
        found[id].push_back(std::move(orbit));
      };
      Filler filler(a, b, q, on_seed);
      for (;;) {
        const std::size_t p = next_prefix.fetch_add(1);
        if (p >= prefixes.size()) break;
        std::copy(prefixes[p].begin(), prefixes[p].end(), filler.cells().begin());
        filler.run(b);
      }
      total += seen;
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  OrbitDecomposition out{shape, q, {}, total.load()};
  for (auto& list : found) {
    std::move(list.begin(), list.end(), std::back_inserter(out.orbits));
  }
  std::sort(out.orbits.begin(), out.orbits.end(), [](const Orbit& x, const Orbit& y) {
    if (x.size != y.size) return x.size < y.size;
    return x.representative < y.representative;
  });
  return out;
}

}  // namespace

OrbitDecomposition decompose(int a, int b, int q, const DecomposeOptions& options) {
  check_dims(a, b, q);
  const Shape shape(a, b);
  if (q < shape.min_ceiling()) return {shape, q, {}, 0};

  const u128 expected = macmahon_count(a, b, q - shape.min_ceiling());
  if (options.state_budget != 0 && expected > options.state_budget) {
    throw BudgetExceeded("Inc^" + std::to_string(q) + "(" + std::to_string(a) + "x" +
                         std::to_string(b) + ") has " + to_string(expected) +
                         " states, over the budget of " + std::to_string(options.state_budget));
  }

  const int bits = std::bit_width(static_cast<unsigned>(q));
  OrbitDecomposition out = bits * shape.size() <= 64
                               ? run_decomposition(a, b, q, options, WordCodec{bits})
                               : run_decomposition(a, b, q, options, BytesCodec{});

  const std::uint64_t covered = std::accumulate(
      out.orbits.begin(), out.orbits.end(), std::uint64_t{0},
      [](std::uint64_t acc, const Orbit& o) { return acc + o.size; });
  if (covered != out.total_states || out.total_states != expected) {
    throw std::logic_error("orbit sizes do not cover the enumeration");
  }

  if (options.check_gcd && q > shape.min_ceiling()) {
    for (const auto& orbit : out.orbits) {
      if (std::gcd(orbit.size, static_cast<std::uint64_t>(q)) == 1) {
        throw TheoremViolation("orbit of size " + std::to_string(orbit.size) +
                               " is coprime to q = " + std::to_string(q));
      }
    }
  }
  return out;
}

int max_ceiling_within_budget(int a, int b, std::uint64_t budget) {
  int q = a + b - 2;
  while (q + 1 <= kMaxCeiling && macmahon_count(a, b, q + 1 - (a + b - 1)) <= budget) ++q;
  return q;
}

}  // namespace planedyn
