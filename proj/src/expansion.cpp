#include "ldpc/expansion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldpc/entropy.hpp"

namespace ldpc {

namespace {

// sum_{s=1}^{smax} C(nn, s), saturating at cap.
std::uint64_t subset_count(int nn, int smax, std::uint64_t cap) {
  long double total = 0.0L, c = 1.0L;
  for (int s = 1; s <= smax; ++s) {
    c = c * (nn - s + 1) / s;
    total += c;
    if (total > (long double)cap) return cap + 1;
  }
  return (std::uint64_t)total;
}

// Enumerate all subsets of size 1..smax as extensions of `pick`; stop early
// on the first violating subset.
template <class Pred>
bool rec_subsets_ok(int nn, int smax, int start, std::vector<int>& pick, Pred&& pred) {
  for (int i = start; i < nn; ++i) {
    pick.push_back(i);
    if (!pred(pick)) return false;
    if ((int)pick.size() < smax)
      if (!rec_subsets_ok(nn, smax, i + 1, pick, pred)) return false;
    pick.pop_back();
  }
  return true;
}

}  // namespace

bool check_expander(const TannerGraph& g, const ExpansionSpec& spec, std::uint64_t work_budget) {
  if (!(spec.alpha > 0.0 && spec.alpha <= 1.0)) throw std::invalid_argument("check_expander: alpha outside (0,1]");
  if (!(spec.gamma > 0.0 && spec.gamma < 1.0)) throw std::invalid_argument("check_expander: gamma outside (0,1)");

  const bool left = spec.side == ExpanderSide::Left;
  const int nn = left ? g.n : g.m;
  const int deg = left ? g.l : g.r;
  const int smax = (int)std::floor(spec.alpha * nn);
  if (smax == 0) return true;

  if (subset_count(nn, smax, work_budget) > work_budget)
    throw std::runtime_error("check_expander: subset enumeration exceeds work budget");

  const auto& side_edges = left ? g.var_edges : g.chk_edges;
  const auto& other_end = left ? g.edge_chk : g.edge_var;

  std::vector<int> stamp(left ? g.m : g.n, -1);
  int epoch = 0;
  auto pred = [&](const std::vector<int>& pick) {
    ++epoch;
    int distinct = 0;
    for (int node : pick)
      for (int e : side_edges[node]) {
        const int nb = other_end[e];
        if (stamp[nb] != epoch) {
          stamp[nb] = epoch;
          ++distinct;
        }
      }
    return (double)distinct >= spec.gamma * (double)pick.size() * (double)deg;
  };

  std::vector<int> pick;
  return rec_subsets_ok(nn, smax, 0, pick, pred);
}

double alpha_max(int l, int r, double gamma) {
  if (l < 2 || r < 2) throw std::invalid_argument("alpha_max: degrees must be >= 2");
  if (!(gamma > 0.0)) throw std::invalid_argument("alpha_max: gamma must be positive");
  if (gamma >= (l - 1.0) / l) throw std::domain_error("alpha_max: requires gamma < 1 - 1/l");

  const double gr = gamma * r;
  auto f = [&](double a) {
    return (l - 1.0) / l * binary_entropy(a) - 1.0 / r * binary_entropy(a * gr) -
           a * gr * binary_entropy(1.0 / gr);
  };

  // f(0+) > 0 exactly when gamma < 1 - 1/l, but the root can be extremely
  // small (its scale is exponential in -1/((l-1)/l - gamma)), so bracket it
  // on a log-spaced grid before bisecting.
  const double hi = std::min(1.0, 1.0 / gr) * (1.0 - 1e-12);
  const int kPoints = 8192;
  const double lo0 = 1e-300;
  double prev_a = lo0;
  double prev_f = f(prev_a);
  const double step = std::pow(hi / lo0, 1.0 / kPoints);
  for (int i = 1; i <= kPoints; ++i) {
    const double a = lo0 * std::pow(step, i);
    const double fa = f(a);
    if (prev_f > 0.0 && fa <= 0.0) {
      double lo = prev_a, up = a;
      while (up - lo > 1e-12 && (up - lo) > 1e-13 * up) {
        const double mid = std::sqrt(lo * up);  // bisect in log space
        if (f(mid) > 0.0)
          lo = mid;
        else
          up = mid;
      }
      return std::sqrt(lo * up);
    }
    prev_a = a;
    prev_f = fa;
  }
  throw std::runtime_error("alpha_max: no sign change on (0, 1/(gamma r)); l=" + std::to_string(l) +
                           " r=" + std::to_string(r) + " gamma=" + std::to_string(gamma));
}

}  // namespace ldpc
