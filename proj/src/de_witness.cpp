#include "ldpc/de_witness.hpp"

#include <cmath>
#include <stdexcept>

namespace ldpc {

WitnessDEState witness_de_init(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("witness_de_init: eps outside [0,1]");
  WitnessDEState s;
  s.p = {eps, eps};
  s.iteration = 1;
  s.terminated = (eps == 0.0);
  return s;
}

WitnessDEState witness_de_step(const WitnessDEState& s, double eps, int r) {
  if (s.terminated) return s;
  const double P = s.p.val, D = s.p.der;
  const double q = 1.0 - std::pow(1.0 - P, r - 1);
  const double qd = (D / P) * q;
  const double eb = 1.0 - eps;

  WitnessDEState out;
  out.p.val = eps * (2.0 - q) * q + eb * q * q;
  out.p.der = eps * (2.0 - q) * (qd + q) + eb * (2.0 * q * qd + q * q);
  out.iteration = s.iteration + 1;
  out.terminated = (out.p.val == 0.0);
  return out;
}

double witness_der_bound_step(double der_bound, double x_prev, double eps, int r) {
  const double eb = 1.0 - eps;
  const double rm = r - 1.0;
  return 2.0 * eps * rm * der_bound + 2.0 * eps * rm * x_prev + eb * rm * rm * x_prev * x_prev +
         2.0 * eb * rm * rm * x_prev * der_bound;
}

double Ms2WitnessDEState::bad_mass() const {
  double v = 0.0;
  for (int i = 0; i < 4; ++i) v += p[i].val;
  return v;
}

double Ms2WitnessDEState::witness_size() const {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) d += p[i].der;
  return d;
}

double Ms2WitnessDEState::total() const {
  double v = 0.0;
  for (const auto& c : p) v += c.val;
  return v;
}

Ms2WitnessDEState ms2_witness_de_init(double eps) {
  Ms2WitnessDEState s;
  s.p[-1 + 2] = {eps, eps};
  s.p[+1 + 2] = {1.0 - eps, 1.0 - eps};
  s.iteration = 1;
  return s;
}

Ms2WitnessDEState ms2_witness_de_step(const Ms2WitnessDEState& s, double eps, int r) {
  // Check step: output class mu iff the minimum of r-1 inputs is mu; the
  // witness of the minimal edge is the one carried forward. Class +2 is good
  // and contributes no witness.
  std::array<ValDer, 5> q{};
  double cum = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double below = cum;
    cum += s.p[i].val;
    const double delta =
        std::pow(1.0 - below, r - 1) - std::pow(1.0 - cum, r - 1);
    q[i].val = delta;
    q[i].der = (s.p[i].val > 0.0) ? (s.p[i].der / s.p[i].val) * delta : 0.0;
  }
  q[4].der = 0.0;

  // Variable step: channel plus two check outputs, merged into {-2..+2}.
  Ms2WitnessDEState out;
  out.iteration = s.iteration + 1;
  for (int ci = 0; ci < 2; ++ci) {
    const int c = ci == 0 ? -1 : +1;
    const double pc = ci == 0 ? eps : 1.0 - eps;
    for (int a = -2; a <= 2; ++a) {
      const ValDer& qa = q[a + 2];
      if (qa.val == 0.0 && qa.der == 0.0) continue;
      for (int b = -2; b <= 2; ++b) {
        const ValDer& qb = q[b + 2];
        int v = c + a + b;
        v = v < -2 ? -2 : (v > 2 ? 2 : v);
        ValDer& o = out.p[v + 2];
        o.val += pc * qa.val * qb.val;
        // product rule for qa(x) qb(x) x at x=1
        o.der += pc * (qa.der * qb.val + qa.val * qb.der + qa.val * qb.val);
      }
    }
  }
  out.p[4].der = 0.0;
  return out;
}

}  // namespace ldpc
