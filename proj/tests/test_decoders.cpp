#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ldpc/channel.hpp"
#include "ldpc/de_scalar.hpp"
#include "ldpc/decoder.hpp"
#include "ldpc/good_sets.hpp"
#include "ldpc/tanner_graph.hpp"

using namespace ldpc;

TEST_CASE("noiseless input is a fixed point of every decoder") {
  const auto g = sample_regular_graph(120, 3, 6, 3);
  const auto e = sample_noise(120, Channel::BSC, 0.0, 1);
  for (auto kind : {DecoderKind::GalB, DecoderKind::LGalB, DecoderKind::MS, DecoderKind::LMS,
                    DecoderKind::BP}) {
    DecoderSpec spec{kind, kind == DecoderKind::MS || kind == DecoderKind::LMS ? 2 : 0, 0.0};
    const auto res = run_decoder(g, e, spec, 8, 7);
    REQUIRE((int)res.trace.size() == 8);
    for (const auto& st : res.trace) {
      CHECK(st.ber == 0.0);
      CHECK(!st.block_error);
      CHECK(st.bad_edge_fraction == 0.0);
    }
  }
  const auto be = sample_noise(120, Channel::BEC, 0.0, 1);
  const auto res = run_decoder(g, be, DecoderSpec{DecoderKind::BP, 0, 0.0}, 8, 7);
  for (const auto& st : res.trace) CHECK(st.ber == 0.0);
}

TEST_CASE("trace entry one reports the raw channel") {
  const auto g = sample_regular_graph(300, 3, 6, 11);
  const auto e = sample_noise(300, Channel::BSC, 0.1, 5);
  const auto res = run_decoder(g, e, DecoderSpec{DecoderKind::GalB, 0, 0.0}, 3, 1);
  CHECK(res.trace[0].ber == doctest::Approx((double)e.bad_count() / 300));
  CHECK(res.trace[0].block_error == (e.bad_count() > 0));
  CHECK(res.trace[0].bad_edge_fraction == doctest::Approx(res.trace[0].ber));
}

TEST_CASE("coupled runs: GalB bad edges are a subset of LGalB bad edges") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 240;
    const auto g = sample_regular_graph(n, 3, 6, seed);
    const auto e = sample_noise(n, Channel::BSC, 0.06, seed + 100);
    const auto ga = run_binary_decoder_messages(g, e, DecoderKind::GalB, 12, seed + 200);
    const auto la = run_binary_decoder_messages(g, e, DecoderKind::LGalB, 12, seed + 200);
    REQUIRE(ga.size() == la.size());
    for (std::size_t k = 0; k < ga.size(); ++k)
      for (std::size_t ed = 0; ed < ga[k].size(); ++ed)
        if (ga[k][ed]) CHECK(la[k][ed]);
  }
}

TEST_CASE("BEC peeling recovers sparse erasures and keeps saturated ones") {
  const auto g = sample_regular_graph(600, 3, 6, 2);
  const auto light = sample_noise(600, Channel::BEC, 0.05, 9);
  const auto res = run_decoder(g, light, DecoderSpec{DecoderKind::BP, 0, 0.0}, 50, 0);
  CHECK(res.trace.back().ber == 0.0);

  NoiseRealization all{Channel::BEC, 1.0, std::vector<std::uint8_t>(600, 1)};
  const auto stuck = run_decoder(g, all, DecoderSpec{DecoderKind::BP, 0, 0.0}, 10, 0);
  for (const auto& st : stuck.trace) CHECK(st.ber == 1.0);
}

TEST_CASE("mean bad-edge fraction tracks density evolution at early depth") {
  const int n = 3000, iters = 4, trials = 30;
  const double eps = 0.02;
  std::vector<double> mean(iters, 0.0);
  for (int t = 0; t < trials; ++t) {
    const auto g = sample_regular_graph(n, 3, 6, 40 + t);
    const auto e = sample_noise(n, Channel::BSC, eps, 400 + t);
    const auto res = run_decoder(g, e, DecoderSpec{DecoderKind::LGalB, 0, 0.0}, iters, 4000 + t);
    for (int k = 0; k < iters; ++k) mean[k] += res.trace[k].bad_edge_fraction / trials;
  }
  double x = eps;
  CHECK(std::abs(mean[0] - x) < 2e-3);
  for (int k = 1; k < iters; ++k) {
    x = lgalb_map(x, eps, 3, 6);
    CHECK(std::abs(mean[k] - x) < 2e-3);
  }
}

TEST_CASE("identical seeds give identical traces") {
  const auto g = sample_regular_graph(200, 3, 6, 21);
  const auto e = sample_noise(200, Channel::BSC, 0.08, 22);
  for (auto kind : {DecoderKind::GalB, DecoderKind::LGalB, DecoderKind::MS, DecoderKind::BP}) {
    DecoderSpec spec{kind, 2, 0.0};
    const auto a = run_decoder(g, e, spec, 10, 23);
    const auto b = run_decoder(g, e, spec, 10, 23);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t k = 0; k < a.trace.size(); ++k) {
      CHECK(a.trace[k].ber == b.trace[k].ber);
      CHECK(a.trace[k].bad_edge_fraction == b.trace[k].bad_edge_fraction);
    }
  }
}

TEST_CASE("unbounded min-sum equals min-sum with a huge clip") {
  const auto g = sample_regular_graph(200, 3, 6, 31);
  const auto e = sample_noise(200, Channel::BSC, 0.07, 32);
  const auto a = run_decoder(g, e, DecoderSpec{DecoderKind::MS, 0, 0.0}, 12, 5);
  const auto b = run_decoder(g, e, DecoderSpec{DecoderKind::MS, 1 << 20, 0.0}, 12, 5);
  for (std::size_t k = 0; k < a.trace.size(); ++k) CHECK(a.trace[k].ber == b.trace[k].ber);
}

TEST_CASE("argument validation") {
  const auto g = sample_regular_graph(60, 3, 6, 1);
  const auto bec = sample_noise(60, Channel::BEC, 0.3, 2);
  CHECK_THROWS_AS(run_decoder(g, bec, DecoderSpec{DecoderKind::GalB, 0, 0.0}, 5, 0),
                  std::invalid_argument);
  const auto e = sample_noise(60, Channel::BSC, 0.1, 2);
  CHECK_THROWS_AS(run_decoder(g, e, DecoderSpec{}, 0, 0), std::invalid_argument);
  const auto wrong = sample_noise(61, Channel::BSC, 0.1, 2);
  CHECK_THROWS_AS(run_decoder(g, wrong, DecoderSpec{}, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(run_binary_decoder_messages(g, e, DecoderKind::MS, 5, 0), std::invalid_argument);
}

TEST_CASE("good-set catalog entries") {
  const auto bec = good_set_for(GoodSetCatalog::BecBp, 4);
  CHECK(bec.beta == doctest::Approx(1.0 / 3.0));
  CHECK(bec.beta_num == 1);

  const auto galb = good_set_for(GoodSetCatalog::BscGalB, 5);
  CHECK(galb.beta_num == 3);
  CHECK(galb.beta == doctest::Approx(0.75));

  const auto ms5 = good_set_for(GoodSetCatalog::Ms5, 5);
  CHECK(ms5.beta == doctest::Approx(0.75));
  CHECK_THROWS_AS(good_set_for(GoodSetCatalog::Ms5, 4), std::invalid_argument);

  const auto bp10 = good_set_for(GoodSetCatalog::Bp10, 5);
  CHECK(bp10.beta_num == 3);
  CHECK_THROWS_AS(good_set_for(GoodSetCatalog::Bp10, 4), std::invalid_argument);
}

TEST_CASE("exchange-condition constants") {
  const auto rep = exchange_conditions(5, 6, 0.75, 0.01);
  CHECK(rep.bit_ok);
  CHECK(!rep.block_ok);  // needs beta strictly below (l-2)/(l-1) = 0.75
  CHECK(rep.gamma_bit == doctest::Approx(0.8 * 1.75 / 2.0));
  CHECK(rep.gamma_block == doctest::Approx(0.8 * 3.75 / 4.0));
  CHECK(rep.p_bit == doctest::Approx(0.01 * 0.25 * 4.0 / 4.0));
  CHECK(rep.p_block == doctest::Approx(0.01 * (5.0 - 0.75 * 4.0) / 60.0));

  const auto ok = exchange_conditions(5, 6, 0.5, 0.01);
  CHECK(ok.block_ok);
}
