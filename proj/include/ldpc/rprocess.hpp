#pragma once

#include <cstdint>
#include <vector>

namespace ldpc {

/// State of the exploration process: internal checks C, surviving edges S,
/// boundary variables B, internal variables I. B may go negative because
/// boundary steps are allowed even with an empty boundary set.
struct RState {
  long long c = 0;
  long long s = 0;
  long long b = 0;
  long long i = 0;
  auto operator<=>(const RState&) const = default;
};

struct RParams {
  int r = 6;  ///< check degree
  double delta = 1.0 / 11.0;
  double eps = 0.05;  ///< probability that a regular step extends
  double gamma() const { return 1.0 - (1.0 + delta) / r; }
};

/// Transition rows. The *Worst rows dominate the alternatives of the same
/// step type, so quantitative runs use only those; the others exist for
/// domination tests.
enum class RStep {
  RegularExtendWorst,  ///< (dC,dS,dB,dI) = (2, 2r-3, 0, 1)
  RegularExtendMid,    ///< (1, r-3, 0, 1)
  RegularExtendWeak,   ///< (0, -3, 0, 1)
  RegularPrune,        ///< (0, -1, 1, 0)
  BoundaryWorst,       ///< (1, r-2, -1, 1)
  BoundaryWeak,        ///< (0, -2, -1, 1)
};

inline bool is_boundary(RStep s) {
  return s == RStep::BoundaryWorst || s == RStep::BoundaryWeak;
}

/// Expansion constraint gamma * r * C <= S + B + I.
bool expansion_ok(const RParams& p, const RState& st);

/// A boundary step keeps the expansion constraint valid only while
/// gamma * r * C <= S + B + I - (1 - delta).
bool boundary_admissible(const RParams& p, const RState& st);

/// Applies one transition row. With enforce = true a boundary step is
/// rejected (std::invalid_argument) when inadmissible, matching the
/// physical process; with enforce = false the constraint is relaxed.
RState r_step(const RParams& p, const RState& st, RStep step, bool enforce = true);

/// st1 dominates st2: S and I no smaller, and no smaller constraint slack
/// S + B + I - gamma * r * C.
bool dominates(const RParams& p, const RState& st1, const RState& st2);

/// Outcome of the i-th regular step of the pair-coupled randomness stream:
/// true = extend (probability eps).
bool regular_extends(const RParams& p, std::uint64_t pair_seed, long long i);

struct RTrace {
  std::vector<RState> states;  ///< includes the initial state
  std::vector<RStep> steps;
  long long i_inf = 0;
  long long t = 0;        ///< steps taken until S = 0 (or the cap)
  bool stopped = false;   ///< reached S = 0
};

/// Greedy run from (C,S,B,I) = (0, S0, 0, 0) using the worst-case rows:
/// take a boundary step whenever admissible, otherwise a regular step that
/// extends with probability eps. Stops at S = 0. Requires
/// 0 < delta < 1/(2(r-1)), (1-delta)/(2delta) integer, eps < 1/(2(r-1)).
RTrace greedy_run(const RParams& p, long long s0, std::uint64_t seed,
                  long long max_steps = 50'000'000);

enum class RStrategy {
  Greedy,            ///< boundary step whenever admissible
  NeverBoundary,     ///< regular steps only
  RandomAdmissible,  ///< admissible boundary step with probability 1/2
};

/// One run under the given strategy with the worst-case rows, using the
/// shared regular-step randomness stream of pair_seed.
RTrace run_strategy(const RParams& p, const RState& u0, RStrategy strat, std::uint64_t pair_seed,
                    long long max_steps = 50'000'000);

struct DominationReport {
  std::vector<std::pair<long long, long long>> pairs;  ///< (greedy I_inf, other I_inf)
  int violations = 0;  ///< pairs where greedy < other
  double mean_greedy = 0.0;
  double mean_other = 0.0;
};

/// Coupled comparison of the greedy strategy against another admissible
/// strategy: each pair shares the regular-step outcome stream, so greedy
/// should dominate pathwise.
DominationReport strategy_domination_check(const RParams& p, const RState& u0, RStrategy other,
                                           int trials, std::uint64_t seed,
                                           long long max_steps = 1'000'000);

}  // namespace ldpc
