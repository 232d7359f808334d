#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ldpc/channel.hpp"
#include "ldpc/decoder.hpp"
#include "ldpc/marking.hpp"
#include "ldpc/rng.hpp"
#include "ldpc/tanner_graph.hpp"

using namespace ldpc;

namespace {

// Dense fixed-point oracle: re-scan every rule until nothing changes.
MarkingResult dense_oracle(const TannerGraph& g, const NoiseRealization& e,
                           const std::vector<int>& init) {
  const int ne = g.num_edges();
  std::vector<std::uint8_t> vc(ne), cv(ne), init_marked(g.n);
  for (int ed : init) {
    vc[ed] = 1;
    init_marked[g.edge_var[ed]] = 1;
  }
  bool changed = true;
  std::vector<std::uint8_t> internal(g.n);
  while (changed) {
    changed = false;
    for (int ed = 0; ed < ne; ++ed)
      if (vc[ed])
        for (int other : g.chk_edges[g.edge_chk[ed]])
          if (other != ed && !cv[other]) {
            cv[other] = 1;
            changed = true;
          }
    for (int v = 0; v < g.n; ++v) {
      int arrivals = 0;
      for (int ed : g.var_edges[v]) arrivals += cv[ed];
      const bool is_internal =
          arrivals >= 1 && (e.bad[v] || init_marked[v] || arrivals >= 2);
      if (is_internal && !internal[v]) {
        internal[v] = 1;
        for (int ed : g.var_edges[v])
          if (!vc[ed]) {
            vc[ed] = 1;
            changed = true;
          }
      }
    }
  }
  MarkingResult res;
  res.marked.assign(g.n, 0);
  res.internal_ = internal;
  for (int v = 0; v < g.n; ++v) {
    int arrivals = 0;
    for (int ed : g.var_edges[v]) arrivals += cv[ed];
    res.marked[v] = init_marked[v] || arrivals >= 1;
    res.marked_count += res.marked[v];
  }
  return res;
}

std::vector<int> random_edges(int ne, int count, std::uint64_t seed) {
  auto eng = derive_engine(seed, 77);
  std::vector<int> all(ne);
  for (int i = 0; i < ne; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), eng);
  all.resize(count);
  return all;
}

}  // namespace

TEST_CASE("marking closure matches the dense fixed-point oracle") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int n = 30;
    const auto g = sample_regular_graph(n, 3, 6, seed);
    const auto e = sample_noise(n, Channel::BSC, 0.15, seed + 50);
    const auto init = random_edges(g.num_edges(), 1 + (int)(seed % 7), seed);
    const auto a = run_marking(g, e, init);
    const auto b = dense_oracle(g, e, init);
    CHECK(a.marked == b.marked);
    CHECK(a.internal_ == b.internal_);
    CHECK(a.marked_count == b.marked_count);
  }
}

TEST_CASE("the closure does not depend on the processing order") {
  const int n = 48;
  const auto g = sample_regular_graph(n, 3, 6, 4);
  const auto e = sample_noise(n, Channel::BSC, 0.12, 5);
  const auto init = random_edges(g.num_edges(), 6, 6);
  const auto fifo = run_marking(g, e, init, MarkSchedule::Fifo);
  const auto lifo = run_marking(g, e, init, MarkSchedule::Lifo);
  CHECK(fifo.marked == lifo.marked);
  CHECK(fifo.internal_ == lifo.internal_);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto rnd = run_marking(g, e, init, MarkSchedule::Random, s);
    CHECK(fifo.marked == rnd.marked);
    CHECK(fifo.internal_ == rnd.internal_);
  }
}

TEST_CASE("empty seed set marks nothing") {
  const auto g = sample_regular_graph(60, 3, 6, 1);
  const auto e = sample_noise(60, Channel::BSC, 0.2, 2);
  const auto res = run_marking(g, e, {});
  CHECK(res.marked_count == 0);
}

TEST_CASE("marking grows monotonically with the seed set") {
  const auto g = sample_regular_graph(40, 3, 6, 9);
  const auto e = sample_noise(40, Channel::BSC, 0.1, 10);
  const auto big = random_edges(g.num_edges(), 8, 11);
  std::vector<int> small(big.begin(), big.begin() + 3);
  const auto a = run_marking(g, e, small);
  const auto b = run_marking(g, e, big);
  for (int v = 0; v < g.n; ++v)
    if (a.marked[v]) CHECK(b.marked[v]);
}

TEST_CASE("marked count bounds every later decoding error count") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int n = 1000, iters = 30;
    const auto g = sample_regular_graph(n, 3, 6, 500 + seed);
    const auto e = sample_noise(n, Channel::BSC, 0.045, 600 + seed);
    const std::uint64_t tie_seed = 700 + seed;
    const auto msgs = run_binary_decoder_messages(g, e, DecoderKind::LGalB, iters, tie_seed);
    const auto res = run_decoder(g, e, DecoderSpec{DecoderKind::LGalB, 0, 0.0}, iters, tie_seed);
    for (int ell : {2, 4, 8}) {
      std::vector<int> init;
      for (int ed = 0; ed < g.num_edges(); ++ed)
        if (msgs[ell - 1][ed]) init.push_back(ed);
      const auto mark = run_marking(g, e, init);
      for (int lp = ell; lp <= iters; ++lp)
        CHECK(res.trace[lp - 1].ber * n <= mark.marked_count + 1e-9);
    }
  }
}

TEST_CASE("marking argument validation") {
  const auto g = sample_regular_graph(30, 3, 6, 1);
  const auto e = sample_noise(30, Channel::BSC, 0.1, 2);
  CHECK_THROWS_AS(run_marking(g, e, {g.num_edges()}), std::out_of_range);
  const auto wrong = sample_noise(31, Channel::BSC, 0.1, 2);
  CHECK_THROWS_AS(run_marking(g, wrong, {}), std::invalid_argument);
}
