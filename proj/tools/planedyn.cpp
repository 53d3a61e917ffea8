// planedyn: command-line front end for promotion, orbit census and verifiers.
//
// Exit codes: 0 pass, 1 counterexample found, 2 usage or precondition error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "planedyn/analysis.hpp"
#include "planedyn/correspondence.hpp"
#include "planedyn/json_io.hpp"
#include "planedyn/k_promotion.hpp"
#include "planedyn/orbit_engine.hpp"

using namespace planedyn;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

int emit_report(const VerificationReport& r) {
  emit(to_json(r));
  return r.pass() ? kExitPass : kExitCounterexample;
}

void guard_box(int a, int b, int c, std::uint64_t budget) {
  if (a < 1 || b < 1 || c < 0) throw PreconditionError("box dimensions must satisfy a, b >= 1 and c >= 0");
  if (a + b + c - 1 > kMaxCeiling) throw PreconditionError("a+b+c-1 exceeds " + std::to_string(kMaxCeiling));
  const u128 n = macmahon_count(a, b, c);
  if (budget != 0 && n > budget) {
    throw BudgetExceeded("box has " + to_string(n) + " states, over the budget of " + std::to_string(budget));
  }
}

// A state file holds either a tableau or a plane partition; partitions are
// carried through the bijection and reported back as partitions.
struct State {
  IncreasingTableau tableau;
  std::optional<int> c;

  static State load(const std::string& path) {
    const Json j = read_json_file(path);
    if (j.is_object() && j.contains("box")) {
      const auto pp = plane_partition_from_json(j);
      return {pp_to_tableau(pp), pp.dims().c};
    }
    return {tableau_from_json(j), std::nullopt};
  }

  [[nodiscard]] Json dump(const IncreasingTableau& t) const {
    return c ? to_json(tableau_to_pp(t, *c)) : to_json(t);
  }
};

Json count_json(u128 n) {
  if (n <= UINT64_MAX) return static_cast<std::uint64_t>(n);
  return to_string(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Promotion dynamics on increasing tableaux and plane partitions"};
  app.require_subcommand(1);

  std::uint64_t budget = kDefaultStateBudget;
  app.add_option("--budget", budget, "State budget for exhaustive runs (0 = unlimited)");

  std::string in_file;
  bool with_trace = false;

  auto* promote_cmd = app.add_subcommand("promote", "Apply one K-promotion step to a tableau");
  promote_cmd->add_option("--in", in_file, "Tableau or plane partition JSON file, or - for stdin")->required();
  promote_cmd->add_flag("--trace", with_trace, "Also print flow path, stream-bed and ribbons");

  auto* demote_cmd = app.add_subcommand("demote", "Apply the inverse of K-promotion");
  demote_cmd->add_option("--in", in_file, "Tableau or plane partition JSON file, or - for stdin")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "Print the promotion orbit of a tableau");
  orbit_cmd->add_option("--in", in_file, "Tableau or plane partition JSON file, or - for stdin")->required();

  int a = 0, b = 0, n = 0;
  unsigned workers = 1;
  bool as_csv = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "Orbit decomposition of Inc^Q(A x B)");
  decompose_cmd->add_option("A", a)->required();
  decompose_cmd->add_option("B", b)->required();
  decompose_cmd->add_option("Q", n)->required();
  auto* json_flag = decompose_cmd->add_flag("--json", "JSON output (default)");
  decompose_cmd->add_flag("--csv", as_csv, "Orbit size histogram as CSV")->excludes(json_flag);
  decompose_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 1024u));

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive property checks");
  verify_cmd->require_subcommand(1);
  auto add_abn = [&](CLI::App* cmd, const char* last) {
    cmd->add_option("A", a)->required();
    cmd->add_option("B", b)->required();
    cmd->add_option(last, n)->required();
    return cmd;
  };
  auto* gcd_cmd = add_abn(verify_cmd->add_subcommand("gcd", "gcd(k, q) > 1 for a+b-1 < q <= QMAX"), "QMAX");
  auto* prime_cmd = add_abn(verify_cmd->add_subcommand("prime", "p | k when p = a+b+c-1 is prime"), "C");
  auto* frame_cmd = add_abn(verify_cmd->add_subcommand("frame", "Frame is invariant under Psi^q"), "Q");
  std::string orbit_seed;
  frame_cmd->add_option("--orbit-of", orbit_seed, "Restrict to the orbit of this tableau JSON file");
  auto* rigidity_cmd = add_abn(verify_cmd->add_subcommand("rigidity", "Frame(V) = Frame(Psi V) only for M"), "Q");
  auto* equiv_cmd =
      add_abn(verify_cmd->add_subcommand("equivariance", "Bijection intertwines rowmotion and promotion"), "C");

  auto* stats_cmd = app.add_subcommand("stats", "Observational statistics");
  stats_cmd->require_subcommand(1);
  auto* h_cmd = add_abn(stats_cmd->add_subcommand("h", "Histogram of h = k/p"), "C");

  auto* count_cmd = add_abn(app.add_subcommand("count", "|J(B_{a,b,c})| = |Inc^{a+b+c-1}(a x b)|"), "C");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const VerifyOptions vopts{.workers = 1, .state_budget = budget};

    if (promote_cmd->parsed()) {
      const auto s = State::load(in_file);
      if (!with_trace) {
        emit(s.dump(promote(s.tableau)));
      } else {
        const auto [u, trace] = promote_with_trace(s.tableau);
        emit({{"tableau", to_json(u)}, {"trace", to_json(trace)}});
      }
    } else if (demote_cmd->parsed()) {
      const auto s = State::load(in_file);
      emit(s.dump(demote(s.tableau)));
    } else if (orbit_cmd->parsed()) {
      const auto s = State::load(in_file);
      const auto o = orbit_of(s.tableau, true);
      Json members = Json::array();
      for (const auto& m : o.members) members.push_back(s.dump(m));
      emit({{"size", o.size}, {"rep", s.dump(o.representative)}, {"members", std::move(members)}});
    } else if (decompose_cmd->parsed()) {
      const auto d = decompose(a, b, n, {.workers = workers, .state_budget = budget});
      if (as_csv) {
        std::cout << histogram_csv(d);
      } else {
        emit(to_json(d));
      }
    } else if (gcd_cmd->parsed()) {
      return emit_report(verify_gcd_theorem(a, b, n, vopts));
    } else if (prime_cmd->parsed()) {
      return emit_report(verify_prime_divisibility(a, b, n, vopts));
    } else if (frame_cmd->parsed()) {
      std::optional<IncreasingTableau> seed;
      if (!orbit_seed.empty()) seed = tableau_from_json(read_json_file(orbit_seed));
      return emit_report(verify_frame_periodicity(a, b, n, vopts, seed));
    } else if (rigidity_cmd->parsed()) {
      return emit_report(verify_sameframe_rigidity(a, b, n, vopts));
    } else if (equiv_cmd->parsed()) {
      guard_box(a, b, n, budget);
      const auto r = check_equivariance(a, b, n);
      emit(to_json(r));
      return r.pass ? kExitPass : kExitCounterexample;
    } else if (h_cmd->parsed()) {
      emit(to_json(h_statistics(a, b, n, vopts)));
    } else if (count_cmd->parsed()) {
      if (a < 1 || b < 1 || n < 0) throw PreconditionError("box dimensions must satisfy a, b >= 1 and c >= 0");
      emit({{"box", {a, b, n}}, {"q", a + b + n - 1}, {"count", count_json(macmahon_count(a, b, n))}});
    }
  } catch (const TheoremViolation& e) {
    std::cerr << "counterexample: " << e.what() << '\n';
    return kExitCounterexample;
  } catch (const std::invalid_argument& e) {  // precondition, format and tableau errors
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise it with --budget)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitPass;
}
