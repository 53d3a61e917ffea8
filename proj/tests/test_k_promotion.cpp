#include "doctest.h"
#include "oracles.hpp"
#include "planedyn/k_promotion.hpp"

#include <set>

using namespace planedyn;

namespace {

const Grid kT = {{1, 2, 4, 5}, {2, 3, 5, 6}, {4, 5, 7, 8}, {5, 6, 8, 9}};
const Grid kPsiT = {{1, 2, 3, 4}, {2, 4, 5, 7}, {3, 5, 6, 8}, {4, 7, 8, 9}};

IncreasingTableau tab(const Grid& g, int q) { return IncreasingTableau::from_rows(g, q); }

std::uint64_t orbit_length(const IncreasingTableau& t) {
  std::uint64_t k = 1;
  for (auto u = promote(t); u != t; u = promote(u)) ++k;
  return k;
}

}  // namespace

TEST_CASE("promote reproduces the worked 4x4 example") {
  CHECK(promote(tab(kT, 9)).rows() == kPsiT);
  CHECK(promote_power(tab(kT, 9), 1) == tab(kPsiT, 9));
}

TEST_CASE("minimal tableau is fixed at ceiling a+b-1") {
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      const auto m = minimal_tableau({a, b});
      CHECK(promote(m) == m);
      CHECK(demote(m) == m);
    }
  }
}

TEST_CASE("M_2x2 viewed in Inc^4") {
  const auto t = tab({{1, 2}, {2, 3}}, 4);
  CHECK(promote(t).rows() == Grid{{1, 2}, {2, 4}});
  const auto [u, trace] = promote_with_trace(t);
  CHECK(u.rows() == Grid{{1, 2}, {2, 4}});
  CHECK(trace.stream_bed == std::vector<Box>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  REQUIRE(trace.stages.size() == 3);
  CHECK(trace.stages[0].value == 2);
  CHECK(trace.stages[0].ribbons.size() == 1);
  CHECK(trace.stages[1].ribbons.size() == 1);
  CHECK(trace.stages[2].ribbons.empty());
}

TEST_CASE("trace of the worked example") {
  const auto [u, trace] = promote_with_trace(tab(kT, 9));
  CHECK(u.rows() == kPsiT);
  const std::vector<Box> bed = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {2, 4},
                                {3, 2}, {3, 4}, {4, 2}, {4, 3}, {4, 4}};
  CHECK(trace.stream_bed == bed);
  CHECK(trace.stages.size() == 8);
  // Stages 4 and 7 only touch trivial ribbons.
  CHECK(trace.stages[2].ribbons.empty());
  CHECK(trace.stages[5].ribbons.empty());
}

TEST_CASE("1x1 trace is empty") {
  const auto [u, trace] = promote_with_trace(minimal_tableau({1, 1}));
  CHECK(u == minimal_tableau({1, 1}));
  CHECK(trace.flow_path.empty());
  CHECK(trace.stream_bed.empty());
}

TEST_CASE("1x1 promotion cycles labels with period q") {
  for (int q = 1; q <= 9; ++q) {
    auto t = tab({{q}}, q);
    CHECK(orbit_length(t) == static_cast<std::uint64_t>(q));
    CHECK(promote(t).rows() == Grid{{q == 1 ? 1 : q - 1}});
  }
}

TEST_CASE("demote inverts the worked example") {
  CHECK(demote(tab(kPsiT, 9)).rows() == kT);
}

TEST_CASE("Inc^5(2x2): bijectivity and orbit periods") {
  const auto all = oracle::brute_force_tableaux(2, 2, 5);
  REQUIRE(all.size() == 20);
  for (const auto& g : all) {
    const auto t = tab(g, 5);
    CHECK(demote(promote(t)) == t);
    CHECK(promote(demote(t)) == t);
    const auto k = orbit_length(t);
    CHECK(k == 5);
    CHECK(promote_power(t, k) == t);
    CHECK(promote_power(t, 0) == t);
    CHECK(promote_power(t, 3 * k + 2, k) == promote_power(t, 2));
  }
}

TEST_CASE("Promoter agrees with the literal staged definition") {
  struct Case {
    int a, b, q_max;
  };
  for (const Case c : {Case{1, 3, 7}, Case{2, 2, 8}, Case{2, 3, 7}, Case{3, 2, 7}, Case{1, 1, 4}}) {
    for (int q = c.a + c.b - 1; q <= c.q_max; ++q) {
      for (const auto& g : oracle::brute_force_tableaux(c.a, c.b, q)) {
        const auto expected = oracle::literal_promote(g, q);
        const auto t = tab(g, q);
        const auto u = promote(t);
        CHECK(u.rows() == expected);
        CHECK(validate_increasing(u.rows(), q).ok());
        CHECK(demote(u) == t);
      }
    }
  }
}

TEST_CASE("trace invariants hold on small exhaustive ranges") {
  for (int q = 3; q <= 8; ++q) {
    for (const auto& g : oracle::brute_force_tableaux(2, 3, q)) {
      const auto t = tab(g, q);
      const auto [u, trace] = promote_with_trace(t);
      CHECK(u == promote(t));
      std::set<Box> bed(trace.stream_bed.begin(), trace.stream_bed.end());
      std::set<Box> from_pairs;
      std::set<BoxPair> pairs(trace.flow_path.begin(), trace.flow_path.end());
      for (const auto& [x, y] : trace.flow_path) {
        CHECK(x < y);
        CHECK(std::abs(x.row - y.row) + std::abs(x.col - y.col) == 1);
        from_pairs.insert(x);
        from_pairs.insert(y);
      }
      CHECK(bed == from_pairs);
      const Shape s = t.shape();
      for (Box b : bed) {
        if (b != Box{1, 1}) {
          CHECK((pairs.count({{b.row, b.col - 1}, b}) || pairs.count({{b.row - 1, b.col}, b})));
        }
        if (b != Box{s.rows, s.cols}) {
          CHECK((pairs.count({b, {b.row, b.col + 1}}) || pairs.count({b, {b.row + 1, b.col}})));
        }
      }
      for (int i = 1; i <= s.rows; ++i) {
        for (int j = 1; j <= s.cols; ++j) {
          if (!bed.count({i, j})) CHECK(u(i, j) == (t(i, j) == 1 ? q : t(i, j) - 1));
        }
      }
    }
  }
}

TEST_CASE("promote rejects invalid input") {
  const auto bad = IncreasingTableau::from_trusted({1, 2}, 3, {2, 1});
  CHECK_THROWS_AS((void)promote(bad), InvalidTableau);
  CHECK_THROWS_AS((void)demote(bad), InvalidTableau);
  CHECK_THROWS_AS((void)promote_with_trace(bad), InvalidTableau);
  CHECK_THROWS_AS((void)promote_power(minimal_tableau({2, 2}), 1, 0), std::invalid_argument);
}
