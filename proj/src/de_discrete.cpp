#include "ldpc/de_discrete.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ldpc {

namespace {

int clip(int v, int M) { return std::clamp(v, -M, M); }

int ms_combine(int a, int b) {
  if (a == 0 || b == 0) return 0;
  const int s = ((a < 0) != (b < 0)) ? -1 : 1;
  return s * std::min(std::abs(a), std::abs(b));
}

DiscreteDensity combine_pair(const DiscreteDensity& a, const DiscreteDensity& b,
                             MinSumVariant variant) {
  // Result values lie within the union of both ranges.
  const int lo = std::min(a.min_value, b.min_value);
  const int hi = std::max(a.max_value(), b.max_value());
  DiscreteDensity out{lo, Eigen::ArrayXd::Zero(hi - lo + 1)};
  for (int i = 0; i < (int)a.pmf.size(); ++i) {
    if (a.pmf[i] == 0.0) continue;
    const int va = a.min_value + i;
    for (int j = 0; j < (int)b.pmf.size(); ++j) {
      if (b.pmf[j] == 0.0) continue;
      const int vb = b.min_value + j;
      const int v = variant == MinSumVariant::MS ? ms_combine(va, vb) : std::min(va, vb);
      out.pmf[v - lo] += a.pmf[i] * b.pmf[j];
    }
  }
  return out;
}

DiscreteDensity clip_density(const DiscreteDensity& d, int M) {
  DiscreteDensity out{-M, Eigen::ArrayXd::Zero(2 * M + 1)};
  for (int i = 0; i < (int)d.pmf.size(); ++i)
    out.pmf[clip(d.min_value + i, M) + M] += d.pmf[i];
  return out;
}

DiscreteDensity convolve(const DiscreteDensity& a, const DiscreteDensity& b) {
  DiscreteDensity out{a.min_value + b.min_value,
                      Eigen::ArrayXd::Zero(a.pmf.size() + b.pmf.size() - 1)};
  for (int i = 0; i < (int)a.pmf.size(); ++i) {
    if (a.pmf[i] == 0.0) continue;
    for (int j = 0; j < (int)b.pmf.size(); ++j) out.pmf[i + j] += a.pmf[i] * b.pmf[j];
  }
  return out;
}

}  // namespace

double DiscreteDensity::tail_geq(int value) const {
  double t = 0.0;
  for (int i = 0; i < (int)pmf.size(); ++i)
    if (min_value + i >= value) t += pmf[i];
  return t;
}

DiscreteDensity bsc_channel_density(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("bsc_channel_density: eps outside [0,1]");
  DiscreteDensity d{-1, Eigen::ArrayXd::Zero(3)};
  d.pmf[0] = eps;       // -1: flipped
  d.pmf[2] = 1.0 - eps; // +1: correct
  return d;
}

DiscreteDensity ms_de_step(const DiscreteDensity& d, double eps, int M, int l, int r,
                           MinSumVariant variant) {
  if (M < 1 || l < 2 || r < 2) throw std::invalid_argument("ms_de_step: bad parameters");
  if (std::abs(d.total() - 1.0) > 1e-6) throw std::logic_error("ms_de_step: pmf does not sum to 1");
  const int vmax = (l - 1) * M + 1;
  if (d.min_value < -vmax || d.max_value() > vmax)
    throw std::logic_error("ms_de_step: support outside the variable-output alphabet");

  DiscreteDensity chk = d;
  for (int i = 1; i < r - 1; ++i) chk = combine_pair(chk, d, variant);
  chk = clip_density(chk, M);

  DiscreteDensity out = bsc_channel_density(eps);
  for (int i = 0; i < l - 1; ++i) out = convolve(out, chk);
  out.pmf /= out.total();  // keep round-off from accumulating across iterations
  return out;
}

double error_probability(const DiscreteDensity& d) {
  double p = 0.0;
  for (int i = 0; i < (int)d.pmf.size(); ++i) {
    const int v = d.min_value + i;
    if (v < 0) p += d.pmf[i];
    if (v == 0) p += 0.5 * d.pmf[i];
  }
  return p;
}

namespace {

bool converges(double eps, int M, int l, int r, MinSumVariant variant, bool all_plus_m, int l_max) {
  DiscreteDensity d = bsc_channel_density(eps);
  for (int i = 0; i < l_max; ++i) {
    const double gap = all_plus_m ? 1.0 - d.tail_geq(M) : error_probability(d);
    if (gap < (all_plus_m ? 1e-8 : 1e-10)) return true;
    d = ms_de_step(d, eps, M, l, r, variant);
  }
  return (all_plus_m ? 1.0 - d.tail_geq(M) : error_probability(d)) < (all_plus_m ? 1e-8 : 1e-10);
}

double bisect_eps(int M, int l, int r, MinSumVariant variant, bool all_plus_m, double tol, int l_max) {
  double lo = 0.0, hi = 0.5;
  if (!converges(1e-4, M, l, r, variant, all_plus_m, l_max))
    throw std::runtime_error("discrete DE: no convergence even at eps=1e-4");
  lo = 1e-4;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (converges(mid, M, l, r, variant, all_plus_m, l_max))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double ms_threshold(int M, int l, int r, double tol, int l_max) {
  return bisect_eps(M, l, r, MinSumVariant::MS, false, tol, l_max);
}

double lms_all_plus_m_boundary(int M, int l, int r, double tol, int l_max) {
  return bisect_eps(M, l, r, MinSumVariant::LMS, true, tol, l_max);
}

}  // namespace ldpc
