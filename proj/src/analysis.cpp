#include "planedyn/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "planedyn/correspondence.hpp"
#include "planedyn/k_promotion.hpp"
#include "planedyn/poset.hpp"

namespace planedyn {

namespace {

constexpr std::size_t kMaxRecordedCounterexamples = 50;

using Clock = std::chrono::steady_clock;

void record(VerificationReport& r, Json counterexample) {
  ++r.counterexample_count;
  if (r.counterexamples.size() < kMaxRecordedCounterexamples) r.counterexamples.push_back(std::move(counterexample));
}

void require_within_budget(int a, int b, int q, std::uint64_t budget) {
  if (a < 1 || b < 1) throw PreconditionError("shape dimensions must be positive");
  if (q > kMaxCeiling) throw PreconditionError("ceiling exceeds " + std::to_string(kMaxCeiling));
  if (q < a + b - 1 || budget == 0) return;
  const u128 states = macmahon_count(a, b, q - (a + b - 1));
  if (states > budget) {
    throw BudgetExceeded("Inc^" + std::to_string(q) + "(" + std::to_string(a) + "x" + std::to_string(b) +
                         ") has " + to_string(states) + " states, over the budget of " +
                         std::to_string(budget));
  }
}

Json orbit_json(int q, const Orbit& o) {
  Json j;
  j["q"] = q;
  j["size"] = o.size;
  j["rep"] = to_json(o.representative);
  return j;
}

void require_prime_box(int a, int b, int c) {
  if (a < 1 || b < 1) throw PreconditionError("a and b must be positive");
  if (c < 1) throw PreconditionError("c must be at least 1; c = 0 is the degenerate minimal-tableau box");
  const int p = a + b + c - 1;
  if (!is_prime(static_cast<std::uint64_t>(p))) {
    throw PreconditionError("p = a+b+c-1 = " + std::to_string(p) + " is not prime");
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["claim"] = r.claim;
  j["parameters"] = r.parameters;
  j["states_checked"] = r.states_checked;
  j["pass"] = r.pass();
  j["counterexample_count"] = r.counterexample_count;
  j["counterexamples"] = r.counterexamples;
  j["details"] = r.details;
  j["duration_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(r.duration).count();
  return j;
}

VerificationReport verify_gcd_theorem(int a, int b, int q_max, const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationReport r;
  r.claim = "gcd(k, q) > 1 for every promotion orbit size k when q > a+b-1";
  r.parameters = {{"a", a}, {"b", b}, {"q_max", q_max}};
  for (int q = a + b; q <= q_max; ++q) require_within_budget(a, b, q, options.state_budget);

  Json per_q = Json::array();
  for (int q = a + b; q <= q_max; ++q) {
    const auto d = decompose(a, b, q, {.workers = options.workers, .state_budget = options.state_budget, .check_gcd = false});
    r.states_checked += d.total_states;
    for (const auto& o : d.orbits) {
      if (std::gcd(o.size, static_cast<std::uint64_t>(q)) == 1) record(r, orbit_json(q, o));
    }
    per_q.push_back({{"q", q}, {"states", d.total_states}, {"orbits", d.orbits.size()}});
  }
  r.details["per_q"] = std::move(per_q);
  r.duration = Clock::now() - start;
  return r;
}

VerificationReport verify_prime_divisibility(int a, int b, int c, const VerifyOptions& options) {
  const auto start = Clock::now();
  require_prime_box(a, b, c);
  const int p = a + b + c - 1;
  require_within_budget(a, b, p, options.state_budget);

  VerificationReport r;
  r.claim = "p = a+b+c-1 prime divides every rowmotion orbit size of J(B_{a,b,c})";
  r.parameters = {{"a", a}, {"b", b}, {"c", c}, {"p", p}};

  const auto d = decompose(a, b, p, {.workers = options.workers, .state_budget = options.state_budget, .check_gcd = false});
  r.states_checked = d.total_states;
  std::vector<std::uint64_t> tableau_sizes;
  for (const auto& o : d.orbits) {
    tableau_sizes.push_back(o.size);
    if (o.size % static_cast<std::uint64_t>(p) != 0) record(r, orbit_json(p, o));
  }
  std::sort(tableau_sizes.begin(), tableau_sizes.end());
  r.details["orbits"] = d.orbits.size();

  const bool ideal_side = a * b * c <= 27;
  r.details["ideal_side_checked"] = ideal_side;
  if (ideal_side) {
    const auto ideal_sizes = rowmotion_orbit_sizes(box_poset(a, b, c));
    for (auto k : ideal_sizes) {
      if (k % static_cast<std::uint64_t>(p) != 0) record(r, {{"side", "ideals"}, {"size", k}});
    }
    if (ideal_sizes != tableau_sizes) {
      record(r, {{"side", "both"}, {"reason", "orbit size multisets differ between ideals and tableaux"}});
    }
  }
  r.duration = Clock::now() - start;
  return r;
}

VerificationReport verify_frame_periodicity(int a, int b, int q, const VerifyOptions& options,
                                            const std::optional<IncreasingTableau>& orbit_of_tableau) {
  const auto start = Clock::now();
  VerificationReport r;
  r.claim = "Frame(Psi^q(U)) = Frame(U) for every U in Inc^q(a x b)";
  r.parameters = {{"a", a}, {"b", b}, {"q", q}};

  const Shape shape(a, b);
  Promoter promoter(shape, q);
  auto check = [&](std::span<const std::uint8_t> cells) {
    ++r.states_checked;
    std::vector<std::uint8_t> cur(cells.begin(), cells.end());
    for (int step = 0; step < q; ++step) promoter.promote(cur);
    const auto u = IncreasingTableau::from_trusted(shape, q, {cells.begin(), cells.end()});
    const auto image = IncreasingTableau::from_trusted(shape, q, cur);
    if (!same_frame(u, image)) record(r, {{"tableau", to_json(u)}, {"image", to_json(image)}});
  };

  if (orbit_of_tableau) {
    const auto& t = *orbit_of_tableau;
    if (t.shape() != shape || t.ceiling() != q) {
      throw PreconditionError("orbit seed does not match the requested shape and ceiling");
    }
    r.parameters["restricted_to_orbit_of"] = to_json(t);
    for (const auto& m : orbit_of(t, true).members) check(m.cells());
  } else {
    require_within_budget(a, b, q, options.state_budget);
    for_each_tableau(a, b, q, check);
  }
  r.duration = Clock::now() - start;
  return r;
}

VerificationReport verify_sameframe_rigidity(int a, int b, int q, const VerifyOptions& options) {
  const auto start = Clock::now();
  require_within_budget(a, b, q, options.state_budget);
  VerificationReport r;
  r.claim = "Frame(V) = Frame(Psi(V)) only for the minimal tableau at q = a+b-1";
  r.parameters = {{"a", a}, {"b", b}, {"q", q}};

  const Shape shape(a, b);
  Promoter promoter(shape, q);
  std::vector<IncreasingTableau> found;
  for_each_tableau(a, b, q, [&](std::span<const std::uint8_t> cells) {
    ++r.states_checked;
    std::vector<std::uint8_t> cur(cells.begin(), cells.end());
    promoter.promote(cur);
    auto v = IncreasingTableau::from_trusted(shape, q, {cells.begin(), cells.end()});
    if (same_frame(v, IncreasingTableau::from_trusted(shape, q, cur))) found.push_back(std::move(v));
  });

  Json listed = Json::array();
  for (const auto& v : found) listed.push_back(to_json(v));
  r.details["same_frame_tableaux"] = std::move(listed);

  if (q == shape.min_ceiling()) {
    const auto m = minimal_tableau(shape);
    for (const auto& v : found) {
      if (v != m) record(r, {{"tableau", to_json(v)}, {"reason", "not minimal"}});
    }
    if (std::find(found.begin(), found.end(), m) == found.end()) {
      record(r, {{"tableau", to_json(m)}, {"reason", "minimal tableau missing"}});
    }
  } else {
    for (const auto& v : found) record(r, {{"tableau", to_json(v)}, {"reason", "q > a+b-1"}});
  }
  r.duration = Clock::now() - start;
  return r;
}

Json to_json(const ResonanceStats& s) {
  Json j;
  j["box"] = Json::array({s.a, s.b, s.c});
  j["p"] = s.p;
  j["orbits"] = s.orbits;
  j["states"] = s.states;
  Json hist = Json::array();
  for (const auto& [h, n] : s.h_histogram) hist.push_back({{"h", h}, {"count", n}});
  j["h_histogram"] = std::move(hist);
  j["odd_h"] = s.odd_h;
  j["even_h"] = s.even_h;
  return j;
}

ResonanceStats h_statistics(int a, int b, int c, const VerifyOptions& options) {
  require_prime_box(a, b, c);
  const int p = a + b + c - 1;
  require_within_budget(a, b, p, options.state_budget);
  const auto d = decompose(a, b, p, {.workers = options.workers, .state_budget = options.state_budget});

  ResonanceStats s{a, b, c, p, d.orbits.size(), d.total_states, {}, 0, 0};
  const auto up = static_cast<std::uint64_t>(p);
  for (const auto& o : d.orbits) {
    if (o.size % up != 0) {
      throw TheoremViolation("orbit of size " + std::to_string(o.size) + " is not a multiple of p = " +
                             std::to_string(p));
    }
    const auto h = o.size / up;
    ++s.h_histogram[h];
    ++(h % 2 == 1 ? s.odd_h : s.even_h);
  }
  return s;
}

}  // namespace planedyn
