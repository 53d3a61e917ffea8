#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planedyn/grid_tableaux.hpp"
#include "planedyn/poset.hpp"

namespace planedyn {

// How the heights grid is laid onto the tableau in T(i,j) = i + j - 1 + pi(i,j).
enum class Orientation { identity, rotate180, complement, rotate180_complement };

// Order in which hyperplane promotion toggles the levels i + j - k.
enum class Sweep { descending, ascending };

struct Convention {
  Orientation orientation;
  Sweep sweep;

  friend bool operator==(const Convention&, const Convention&) = default;
};

[[nodiscard]] const char* to_string(Orientation o);
[[nodiscard]] const char* to_string(Sweep s);

// The eight candidates, in the fixed order calibration tries them.
[[nodiscard]] std::array<Convention, 8> candidate_conventions();

// First candidate that makes the correspondence equivariant on the
// calibration boxes (1,1,1), (2,2,1), (2,2,2), (2,3,2). Computed once per
// process; throws std::logic_error if no candidate passes.
[[nodiscard]] const Convention& calibrated_convention();

// Promotion of an ideal of B_{a,b,c}: toggle every element, grouped by the
// level i + j - k and swept in the given direction.
[[nodiscard]] OrderIdeal hyperplane_promotion(const FinitePoset& box, const OrderIdeal& ideal,
                                              Sweep sweep);

// Toggle sequence phi (applied first to last) with
//   phi o rowmotion = hyperplane_promotion(sweep) o phi,
// found by repeatedly moving a source of the rowmotion toggle word to its end.
[[nodiscard]] std::vector<int> rowmotion_conjugator(BoxDims dims, Sweep sweep);

// Psi-equivariant bijection J(B_{a,b,c}) -> Inc^{a+b+c-1}(a x b) for one box.
class BoxCorrespondence {
 public:
  BoxCorrespondence(int a, int b, int c);
  BoxCorrespondence(int a, int b, int c, Convention convention);

  [[nodiscard]] BoxDims dims() const { return dims_; }
  [[nodiscard]] int ceiling() const { return dims_.a + dims_.b + dims_.c - 1; }
  [[nodiscard]] const Convention& convention() const { return convention_; }
  [[nodiscard]] const std::vector<int>& conjugator() const { return flips_; }

  // Throws InvalidTableau if the convention yields a non-increasing filling.
  [[nodiscard]] IncreasingTableau to_tableau(const PlanePartition& pp) const;
  [[nodiscard]] PlanePartition to_plane_partition(const IncreasingTableau& t) const;

 private:
  BoxDims dims_;
  Convention convention_;
  std::vector<int> flips_;
};

[[nodiscard]] IncreasingTableau pp_to_tableau(const PlanePartition& pp);
// Requires t.ceiling() == a + b + c - 1 with c >= 0.
[[nodiscard]] PlanePartition tableau_to_pp(const IncreasingTableau& t, int c);

// Rowmotion transported to heights grids.
[[nodiscard]] PlanePartition rowmotion(const PlanePartition& pp);

struct EquivarianceReport {
  BoxDims box;
  std::uint64_t states = 0;
  bool pass = true;
  std::optional<PlanePartition> counterexample;
};

[[nodiscard]] EquivarianceReport check_equivariance(int a, int b, int c);
[[nodiscard]] EquivarianceReport check_equivariance(int a, int b, int c, Convention convention);

using u128 = unsigned __int128;

// Number of plane partitions in an a x b x c box, exact. Throws
// std::overflow_error past 128 bits.
[[nodiscard]] u128 macmahon_count(int a, int b, int c);
[[nodiscard]] std::string to_string(u128 value);

}  // namespace planedyn
