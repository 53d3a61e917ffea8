#pragma once

// Slow, literal reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "planedyn/grid_tableaux.hpp"

namespace planedyn::oracle {

// K-promotion exactly as defined: for every v = 2..q recompute the ribbon
// decomposition of the current {1, v} boxes, swap inside nontrivial ones,
// then decrement and wrap 0 to q.
inline Grid literal_promote(Grid grid, int q) {
  const Shape shape(static_cast<int>(grid.size()), static_cast<int>(grid[0].size()));
  for (int v = 2; v <= q; ++v) {
    std::vector<std::uint8_t> cells;
    for (const auto& row : grid) {
      for (int x : row) cells.push_back(static_cast<std::uint8_t>(x));
    }
    for (const Ribbon& r : ribbon_components(shape, cells, 1, v)) {
      if (r.trivial()) continue;
      for (Box b : r.boxes) {
        int& x = grid[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)];
        x = x == 1 ? v : 1;
      }
    }
  }
  for (auto& row : grid) {
    for (int& x : row) x = x == 1 ? q : x - 1;
  }
  return grid;
}

// Every a x b grid over 1..q, filtered by validate_increasing.
inline std::vector<Grid> brute_force_tableaux(int a, int b, int q) {
  std::vector<Grid> out;
  Grid g(static_cast<std::size_t>(a), std::vector<int>(static_cast<std::size_t>(b), 1));
  const int n = a * b;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      if (validate_increasing(g, q).ok()) out.push_back(g);
      return;
    }
    for (int x = 1; x <= q; ++x) {
      g[static_cast<std::size_t>(k / b)][static_cast<std::size_t>(k % b)] = x;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace planedyn::oracle
