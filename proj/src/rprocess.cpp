#include "ldpc/rprocess.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ldpc/rng.hpp"

namespace ldpc {

namespace {

double slack(const RParams& p, const RState& st) {
  return (double)st.s + st.b + st.i - p.gamma() * p.r * st.c;
}

constexpr double kTol = 1e-9;

void validate(const RParams& p) {
  const double lim = 1.0 / (2.0 * (p.r - 1));
  if (p.r < 3) throw std::invalid_argument("rprocess: r must be >= 3");
  if (!(p.delta > 0.0 && p.delta < lim))
    throw std::invalid_argument("rprocess: need 0 < delta < 1/(2(r-1))");
  const double cycles = (1.0 - p.delta) / (2.0 * p.delta);
  if (std::abs(cycles - std::round(cycles)) > kTol)
    throw std::invalid_argument("rprocess: (1-delta)/(2delta) must be an integer");
  if (!(p.eps >= 0.0 && p.eps < lim))
    throw std::invalid_argument("rprocess: need 0 <= eps < 1/(2(r-1))");
}

}  // namespace

bool expansion_ok(const RParams& p, const RState& st) {
  return p.gamma() * p.r * st.c <= (double)st.s + st.b + st.i + kTol;
}

bool boundary_admissible(const RParams& p, const RState& st) {
  return p.gamma() * p.r * st.c <= (double)st.s + st.b + st.i - (1.0 - p.delta) + kTol;
}

RState r_step(const RParams& p, const RState& st, RStep step, bool enforce) {
  if (enforce && is_boundary(step) && !boundary_admissible(p, st))
    throw std::invalid_argument("r_step: boundary step inadmissible at (C,S,B,I) = (" +
                                std::to_string(st.c) + "," + std::to_string(st.s) + "," +
                                std::to_string(st.b) + "," + std::to_string(st.i) + ")");
  RState n = st;
  switch (step) {
    case RStep::RegularExtendWorst:
      n.c += 2;
      n.s += 2 * p.r - 3;
      n.i += 1;
      break;
    case RStep::RegularExtendMid:
      n.c += 1;
      n.s += p.r - 3;
      n.i += 1;
      break;
    case RStep::RegularExtendWeak:
      n.s -= 3;
      n.i += 1;
      break;
    case RStep::RegularPrune:
      n.s -= 1;
      n.b += 1;
      break;
    case RStep::BoundaryWorst:
      n.c += 1;
      n.s += p.r - 2;
      n.b -= 1;
      n.i += 1;
      break;
    case RStep::BoundaryWeak:
      n.s -= 2;
      n.b -= 1;
      n.i += 1;
      break;
  }
  return n;
}

bool dominates(const RParams& p, const RState& st1, const RState& st2) {
  return st1.s >= st2.s && st1.i >= st2.i && slack(p, st1) >= slack(p, st2) - kTol;
}

bool regular_extends(const RParams& p, std::uint64_t pair_seed, long long i) {
  const double u = (double)(mix64(pair_seed, (std::uint64_t)i) >> 11) * 0x1.0p-53;
  return u < p.eps;
}

RTrace run_strategy(const RParams& p, const RState& u0, RStrategy strat, std::uint64_t pair_seed,
                    long long max_steps) {
  RTrace tr;
  tr.states.push_back(u0);
  RState st = u0;
  long long regulars = 0;
  while (st.s > 0 && (long long)tr.steps.size() < max_steps) {
    bool take_boundary = false;
    if (boundary_admissible(p, st)) {
      switch (strat) {
        case RStrategy::Greedy:
          take_boundary = true;
          break;
        case RStrategy::NeverBoundary:
          break;
        case RStrategy::RandomAdmissible:
          take_boundary =
              mix64(pair_seed, 0x737472617465ULL, (std::uint64_t)tr.steps.size()) & 1;
          break;
      }
    }
    RStep step;
    if (take_boundary) {
      step = RStep::BoundaryWorst;
    } else {
      step = regular_extends(p, pair_seed, regulars) ? RStep::RegularExtendWorst
                                                     : RStep::RegularPrune;
      ++regulars;
    }
    st = r_step(p, st, step);
    tr.steps.push_back(step);
    tr.states.push_back(st);
  }
  tr.stopped = st.s <= 0;
  tr.t = (long long)tr.steps.size();
  tr.i_inf = st.i;
  return tr;
}

RTrace greedy_run(const RParams& p, long long s0, std::uint64_t seed, long long max_steps) {
  validate(p);
  if (s0 < 0) throw std::invalid_argument("greedy_run: S0 must be >= 0");
  return run_strategy(p, RState{0, s0, 0, 0}, RStrategy::Greedy, seed, max_steps);
}

DominationReport strategy_domination_check(const RParams& p, const RState& u0, RStrategy other,
                                           int trials, std::uint64_t seed, long long max_steps) {
  DominationReport rep;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t pair_seed = mix64(seed, (std::uint64_t)t);
    const auto a = run_strategy(p, u0, RStrategy::Greedy, pair_seed, max_steps);
    const auto b = run_strategy(p, u0, other, pair_seed, max_steps);
    rep.pairs.emplace_back(a.i_inf, b.i_inf);
    if (a.i_inf < b.i_inf) ++rep.violations;
    rep.mean_greedy += a.i_inf;
    rep.mean_other += b.i_inf;
  }
  if (trials > 0) {
    rep.mean_greedy /= trials;
    rep.mean_other /= trials;
  }
  return rep;
}

}  // namespace ldpc
