#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "ldpc/channel.hpp"
#include "ldpc/entropy.hpp"
#include "ldpc/tanner_graph.hpp"

using namespace ldpc;

TEST_CASE("sampled graphs satisfy degree invariants for many seeds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = sample_regular_graph(60, 3, 6, seed);
    CHECK(g.valid());
    CHECK(g.n == 60);
    CHECK(g.m == 30);
    for (int v = 0; v < g.n; ++v) CHECK(g.var_edges[v].size() == 3);
    for (int c = 0; c < g.m; ++c) CHECK(g.chk_edges[c].size() == 6);
    for (int e = 0; e < g.num_edges(); ++e) {
      CHECK(g.edge_var[e] == e / g.l);  // canonical socket layout
      CHECK(g.edge_chk[e] >= 0);
      CHECK(g.edge_chk[e] < g.m);
    }
  }
}

TEST_CASE("multi-edge diagnostics count parallel pairs") {
  int with_multi = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = sample_regular_graph(12, 3, 6, seed);
    std::multiset<std::pair<int, int>> pairs;
    for (int e = 0; e < g.num_edges(); ++e) pairs.insert({g.edge_var[e], g.edge_chk[e]});
    int expected = 0;
    for (auto it = pairs.begin(); it != pairs.end();) {
      const auto cnt = (int)pairs.count(*it);
      expected += cnt * (cnt - 1) / 2;
      std::advance(it, cnt);
    }
    CHECK(g.multi_edge_count == expected);
    if (g.multi_edge_count > 0) ++with_multi;
  }
  CHECK(with_multi > 0);  // small graphs do produce parallel edges
}

TEST_CASE("sampling rejects invalid parameters") {
  CHECK_THROWS_AS(sample_regular_graph(10, 3, 4, 0), std::invalid_argument);  // 30 % 4 != 0
  CHECK_THROWS_AS(sample_regular_graph(4, 3, 6, 0), std::invalid_argument);   // n < r
}

TEST_CASE("serialization round-trips exactly") {
  const auto g = sample_regular_graph(24, 3, 4, 7);
  std::stringstream ss;
  write_graph(ss, g);
  const auto h = read_graph(ss);
  CHECK(h.n == g.n);
  CHECK(h.m == g.m);
  CHECK(h.l == g.l);
  CHECK(h.r == g.r);
  CHECK(h.edge_var == g.edge_var);
  CHECK(h.edge_chk == g.edge_chk);
  CHECK(h.multi_edge_count == g.multi_edge_count);
}

TEST_CASE("graph sampling is deterministic in the seed") {
  const auto a = sample_regular_graph(60, 3, 6, 123);
  const auto b = sample_regular_graph(60, 3, 6, 123);
  const auto c = sample_regular_graph(60, 3, 6, 124);
  CHECK(a.edge_chk == b.edge_chk);
  CHECK(a.edge_chk != c.edge_chk);
}

TEST_CASE("noise sampling matches its rate within a binomial CI") {
  const int n = 20000;
  const double eps = 0.07;
  long long bad = 0;
  for (std::uint64_t s = 0; s < 20; ++s) bad += sample_noise(n, Channel::BSC, eps, s).bad_count();
  const double total = 20.0 * n;
  const double phat = bad / total;
  const double sigma = std::sqrt(eps * (1 - eps) / total);
  CHECK(std::abs(phat - eps) < 4 * sigma);
  CHECK(sample_noise(n, Channel::BSC, 0.0, 1).bad_count() == 0);
  CHECK(sample_noise(n, Channel::BEC, 1.0, 1).bad_count() == n);
}

TEST_CASE("binary entropy and the capacity threshold") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK_THROWS_AS(binary_entropy(-0.1), std::invalid_argument);
  CHECK(shannon_threshold(0.5) == doctest::Approx(0.11002).epsilon(1e-3));
  CHECK(shannon_threshold(0.25) == doctest::Approx(0.2145).epsilon(5e-3));
  for (double rate : {0.0, 0.1, 0.33, 0.5, 0.9}) {
    const double e = shannon_threshold(rate);
    CHECK(std::abs(binary_entropy(e) - (1.0 - rate)) < 1e-9);
  }
}
