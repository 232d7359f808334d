#include <cmath>

#include "doctest.h"
#include "ldpc/de_discrete.hpp"
#include "ldpc/de_scalar.hpp"
#include "ldpc/de_witness.hpp"

using namespace ldpc;

TEST_CASE("value track reproduces the scalar recursion to 1e-12") {
  for (int r : {4, 6, 10}) {
    for (double eps : {0.01, 0.03}) {
      auto s = witness_de_init(eps);
      double x = eps;
      for (int it = 2; it <= 200; ++it) {
        s = witness_de_step(s, eps, r);
        x = lgalb_map(x, eps, 3, r);
        CHECK(std::abs(s.p.val - x) < 1e-12);
      }
    }
  }
}

TEST_CASE("derivative dominates iteration times value") {
  const double eps = 0.03;
  auto s = witness_de_init(eps);
  CHECK(s.p.der >= 1 * s.p.val - 1e-15);
  for (int it = 2; it <= 200; ++it) {
    s = witness_de_step(s, eps, 6);
    CHECK(s.p.der >= it * s.p.val - 1e-12);
  }
}

TEST_CASE("expected witness size decays below threshold") {
  const double eps = 0.03;  // below the (3,6) linearized threshold 0.0336
  auto s = witness_de_init(eps);
  std::vector<double> der{s.p.der};
  for (int it = 2; it <= 200; ++it) {
    s = witness_de_step(s, eps, 6);
    der.push_back(s.p.der);
  }
  // monotone decreasing from some iteration l0 <= 20 onwards
  int l0 = -1;
  for (int i = 1; i < (int)der.size(); ++i) {
    if (der[i] < der[i - 1]) {
      l0 = i;
      break;
    }
  }
  REQUIRE(l0 >= 0);
  CHECK(l0 + 1 <= 20);
  for (int i = l0 + 1; i < (int)der.size(); ++i) CHECK(der[i] <= der[i - 1] + 1e-15);
  CHECK(der.back() < 1e-6);
}

TEST_CASE("witness size grows without bound above threshold") {
  const double eps = 0.05;  // above 0.0336
  auto s = witness_de_init(eps);
  for (int it = 2; it <= 120; ++it) s = witness_de_step(s, eps, 6);
  CHECK(s.p.der > 1.0);
}

TEST_CASE("scalar bound step dominates the exact derivative") {
  const double eps = 0.03;
  auto s = witness_de_init(eps);
  double bound = s.p.der, x_prev = s.p.val;
  for (int it = 2; it <= 120; ++it) {
    bound = witness_der_bound_step(bound, x_prev, eps, 6);
    s = witness_de_step(s, eps, 6);
    x_prev = s.p.val;
    CHECK(s.p.der <= bound + 1e-12);
  }
}

TEST_CASE("five-class system conserves mass and matches the discrete DE") {
  const double eps = 0.025;
  auto s = ms2_witness_de_init(eps);
  DiscreteDensity d = bsc_channel_density(eps);
  for (int it = 2; it <= 40; ++it) {
    s = ms2_witness_de_step(s, eps, 6);
    d = ms_de_step(d, eps, 2, 3, 6, MinSumVariant::LMS);
    CHECK(s.total() == doctest::Approx(1.0).epsilon(1e-12));
    for (int mu = -2; mu <= 2; ++mu) {
      double mass = 0.0;
      for (int v = d.min_value; v <= d.max_value(); ++v)
        if (std::clamp(v, -2, 2) == mu) mass += d.prob(v);
      CHECK(std::abs(s.p[mu + 2].val - mass) < 1e-10);
    }
  }
}

TEST_CASE("the all-good class carries no witness mass") {
  auto s = ms2_witness_de_init(0.02);
  for (int it = 2; it <= 30; ++it) {
    s = ms2_witness_de_step(s, 0.02, 6);
    CHECK(s.p[4].der == 0.0);
  }
}

TEST_CASE("five-class witness size vanishes below the boundary and not above") {
  auto below = ms2_witness_de_init(0.025);
  for (int it = 2; it <= 200; ++it) below = ms2_witness_de_step(below, 0.025, 6);
  CHECK(below.witness_size() < 1e-6);
  CHECK(below.bad_mass() < 1e-8);

  auto above = ms2_witness_de_init(0.04);
  for (int it = 2; it <= 200; ++it) above = ms2_witness_de_step(above, 0.04, 6);
  CHECK(above.bad_mass() > 1e-3);
}
