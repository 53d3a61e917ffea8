#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planedyn/json_io.hpp"
#include "planedyn/orbit_engine.hpp"

namespace planedyn {

// A verifier was called outside its domain (composite p, c < 1, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VerifyOptions {
  unsigned workers = 1;
  std::uint64_t state_budget = kDefaultStateBudget;
};

struct VerificationReport {
  std::string claim;
  Json parameters;
  std::uint64_t states_checked = 0;
  std::vector<Json> counterexamples;  // capped; see counterexample_count
  std::uint64_t counterexample_count = 0;
  Json details = Json::object();
  std::chrono::duration<double> duration{};

  [[nodiscard]] bool pass() const { return counterexample_count == 0; }
};

[[nodiscard]] Json to_json(const VerificationReport& r);

[[nodiscard]] bool is_prime(std::uint64_t n);

// gcd(k, q) > 1 for every orbit of Inc^q(a x b), a+b-1 < q <= q_max.
[[nodiscard]] VerificationReport verify_gcd_theorem(int a, int b, int q_max, const VerifyOptions& options = {});

// p | k for every orbit when p = a+b+c-1 is prime. Runs on tableaux; for
// a*b*c <= 27 the rowmotion orbits of J(B_{a,b,c}) are computed directly and
// must give the same multiset.
[[nodiscard]] VerificationReport verify_prime_divisibility(int a, int b, int c, const VerifyOptions& options = {});

// Frame(Psi^q(U)) = Frame(U) for every U in Inc^q(a x b), or only for the
// orbit of `orbit_of_tableau` when given.
[[nodiscard]] VerificationReport verify_frame_periodicity(
    int a, int b, int q, const VerifyOptions& options = {},
    const std::optional<IncreasingTableau>& orbit_of_tableau = std::nullopt);

// The tableaux with Frame(V) = Frame(Psi(V)) are exactly {M} at q = a+b-1 and
// none above.
[[nodiscard]] VerificationReport verify_sameframe_rigidity(int a, int b, int q, const VerifyOptions& options = {});

struct ResonanceStats {
  int a = 0, b = 0, c = 0;
  int p = 0;
  std::uint64_t orbits = 0;
  std::uint64_t states = 0;
  std::map<std::uint64_t, std::uint64_t> h_histogram;  // h = k / p -> orbit count
  std::uint64_t odd_h = 0;
  std::uint64_t even_h = 0;
};

[[nodiscard]] Json to_json(const ResonanceStats& s);

// Throws PreconditionError for c < 1 or composite p, TheoremViolation if some
// orbit size is not a multiple of p.
[[nodiscard]] ResonanceStats h_statistics(int a, int b, int c, const VerifyOptions& options = {});

}  // namespace planedyn
