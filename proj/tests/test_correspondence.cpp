#include "doctest.h"
#include "oracles.hpp"
#include "planedyn/correspondence.hpp"
#include "planedyn/k_promotion.hpp"

#include <set>

using namespace planedyn;

namespace {

std::vector<PlanePartition> all_pps(BoxDims d) {
  std::vector<PlanePartition> out;
  for_each_plane_partition(d, [&](const PlanePartition& pp) { out.push_back(pp); });
  return out;
}

}  // namespace

TEST_CASE("macmahon_count") {
  CHECK(macmahon_count(3, 4, 0) == 1);
  CHECK(macmahon_count(0, 5, 5) == 1);
  CHECK(macmahon_count(1, 1, 1) == 2);
  CHECK(macmahon_count(2, 2, 2) == 20);
  CHECK(macmahon_count(3, 3, 3) == 980);
  CHECK(to_string(macmahon_count(10, 10, 10)) == "9265037718181937012241727284450000");
  CHECK_THROWS_AS((void)macmahon_count(11, 11, 11), std::overflow_error);
  CHECK_THROWS_AS((void)macmahon_count(-1, 1, 1), std::invalid_argument);
  CHECK(to_string(u128{0}) == "0");

  // against direct enumeration of heights grids
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 0; c <= 4; ++c) CHECK(macmahon_count(a, b, c) == all_pps({a, b, c}).size());
}

TEST_CASE("calibration picks rotate180 with a descending sweep") {
  const auto& conv = calibrated_convention();
  CHECK(conv.orientation == Orientation::rotate180);
  CHECK(conv.sweep == Sweep::descending);
  // every earlier candidate fails somewhere on the calibration boxes
  for (const auto& candidate : candidate_conventions()) {
    if (candidate == conv) break;
    bool all = true;
    for (BoxDims d : {BoxDims{1, 1, 1}, BoxDims{2, 2, 1}, BoxDims{2, 2, 2}, BoxDims{2, 3, 2}}) {
      all = all && check_equivariance(d.a, d.b, d.c, candidate).pass;
    }
    CHECK_FALSE(all);
  }
}

TEST_CASE("conjugator intertwines rowmotion and hyperplane promotion") {
  for (BoxDims d : {BoxDims{1, 1, 1}, BoxDims{2, 2, 1}, BoxDims{2, 2, 2}, BoxDims{2, 3, 2}, BoxDims{3, 2, 3}}) {
    const auto box = box_poset(d.a, d.b, d.c);
    for (Sweep sweep : {Sweep::descending, Sweep::ascending}) {
      const auto flips = rowmotion_conjugator(d, sweep);
      auto phi = [&](OrderIdeal ideal) {
        for (int x : flips) ideal = toggle(box, ideal, x);
        return ideal;
      };
      for (const auto& ideal : enumerate_ideals(box)) {
        CHECK(phi(rowmotion(box, ideal)) == hyperplane_promotion(box, phi(ideal), sweep));
      }
    }
  }
  // c = 1: both words toggle by i + j, nothing to conjugate
  CHECK(rowmotion_conjugator({3, 4, 1}, Sweep::descending).empty());
}

TEST_CASE("degenerate and 1x1x1 boxes") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const auto pp = PlanePartition::empty({a, b, 0});
      CHECK(pp_to_tableau(pp) == minimal_tableau({a, b}));
      CHECK(tableau_to_pp(minimal_tableau({a, b}), 0) == pp);
      CHECK(check_equivariance(a, b, 0).pass);
    }
  }
  const BoxDims one{1, 1, 1};
  const auto empty = PlanePartition::empty(one);
  const auto full = PlanePartition::from_rows(one, {{1}});
  CHECK(pp_to_tableau(empty).rows() == Grid{{1}});
  CHECK(pp_to_tableau(full).rows() == Grid{{2}});
  CHECK(tableau_to_pp(IncreasingTableau::from_rows({{2}}, 2), 1) == full);
  CHECK(tableau_to_pp(IncreasingTableau::from_rows({{1}}, 2), 1) == empty);
}

TEST_CASE("2x2x2: image is Inc^5(2x2), equivariant, round-trips") {
  const BoxDims d{2, 2, 2};
  std::set<Grid> image;
  for (const auto& pp : all_pps(d)) {
    const auto t = pp_to_tableau(pp);
    image.insert(t.rows());
    CHECK(promote(t) == pp_to_tableau(rowmotion(pp)));
    CHECK(tableau_to_pp(t, 2) == pp);
  }
  const auto expected = oracle::brute_force_tableaux(2, 2, 5);
  CHECK(image == std::set<Grid>(expected.begin(), expected.end()));
}

TEST_CASE("check_equivariance over small boxes") {
  for (BoxDims d : {BoxDims{1, 1, 1}, BoxDims{2, 2, 1}, BoxDims{2, 2, 2}, BoxDims{2, 3, 2},
                    BoxDims{3, 3, 2}, BoxDims{3, 3, 3}, BoxDims{1, 4, 3}, BoxDims{4, 2, 2}}) {
    const auto report = check_equivariance(d.a, d.b, d.c);
    CHECK(report.pass);
    CHECK_FALSE(report.counterexample.has_value());
    CHECK(report.states == macmahon_count(d.a, d.b, d.c));
  }
  CHECK(check_equivariance(3, 3, 3).states == 980);

  const auto bad = check_equivariance(2, 2, 2, {Orientation::identity, Sweep::descending});
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.counterexample.has_value());
}

TEST_CASE("round trips both directions on a wider range") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) {
        const BoxCorrespondence corr(a, b, c);
        std::set<Grid> seen;
        for (const auto& pp : all_pps({a, b, c})) {
          const auto t = corr.to_tableau(pp);
          CHECK(seen.insert(t.rows()).second);
          CHECK(corr.to_plane_partition(t) == pp);
          CHECK(pp_to_tableau(corr.to_plane_partition(t)) == t);
        }
      }
    }
  }
}

TEST_CASE("tableau_to_pp preconditions") {
  const auto t = IncreasingTableau::from_rows({{1, 2}, {2, 4}}, 4);
  CHECK_THROWS_AS((void)tableau_to_pp(t, -1), std::invalid_argument);
  CHECK_THROWS_AS((void)tableau_to_pp(t, 2), std::invalid_argument);
  CHECK_NOTHROW((void)tableau_to_pp(t, 1));
  CHECK_THROWS_AS((void)pp_to_tableau(PlanePartition::from_rows({2, 2, 3}, {{4, 0}, {0, 0}})), std::invalid_argument);
}
