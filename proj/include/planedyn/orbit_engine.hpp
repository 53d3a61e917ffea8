#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "planedyn/grid_tableaux.hpp"

namespace planedyn {

inline constexpr std::uint64_t kDefaultStateBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an orbit contradicts gcd(k, q) > 1 or p | k.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Visits every element of Inc^q(a x b) once, row-major lexicographic order.
// The span is only valid during the call.
void for_each_tableau(int a, int b, int q,
                      const std::function<void(std::span<const std::uint8_t>)>& visit);
[[nodiscard]] std::vector<IncreasingTableau> enumerate_tableaux(int a, int b, int q);
[[nodiscard]] std::uint64_t count_tableaux(int a, int b, int q);

struct Orbit {
  IncreasingTableau representative;  // row-major lexicographic minimum
  std::uint64_t size = 0;
  std::vector<IncreasingTableau> members;  // in promotion order from the representative; opt-in

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

// Throws std::logic_error if promotion ever produces a non-increasing filling.
[[nodiscard]] Orbit orbit_of(const IncreasingTableau& t, bool keep_members = false);

struct DecomposeOptions {
  unsigned workers = 1;
  std::uint64_t state_budget = kDefaultStateBudget;  // 0 means unlimited
  bool check_gcd = true;  // throw TheoremViolation on gcd(k, q) = 1 when q > a+b-1
  bool keep_members = false;
};

struct OrbitDecomposition {
  Shape shape;
  int q = 0;
  std::vector<Orbit> orbits;  // sorted by (size, representative)
  std::uint64_t total_states = 0;

  // orbit size -> number of orbits of that size
  [[nodiscard]] std::map<std::uint64_t, std::uint64_t> size_histogram() const;

  friend bool operator==(const OrbitDecomposition&, const OrbitDecomposition&) = default;
};

// Throws BudgetExceeded (before doing any work) if |Inc^q(a x b)| exceeds the
// budget.
[[nodiscard]] OrbitDecomposition decompose(int a, int b, int q, const DecomposeOptions& options = {});

// Largest q whose state count fits the budget; a+b-2 if even the minimal
// ceiling does not.
[[nodiscard]] int max_ceiling_within_budget(int a, int b, std::uint64_t budget);

}  // namespace planedyn
