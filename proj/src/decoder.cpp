#include "ldpc/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ldpc/rng.hpp"

namespace ldpc {

namespace {

constexpr double kLlrCap = 700.0;

IterationStats channel_only_stats(const TannerGraph& g, const NoiseRealization& e) {
  IterationStats st;
  const int errs = e.bad_count();
  st.ber = (double)errs / g.n;
  st.block_error = errs > 0;
  st.bad_edge_fraction = (double)errs * g.l / g.num_edges();
  return st;
}

// GalB / LGalB over BSC, and BP over BEC (same data layout: bad flags).
void run_binary(const TannerGraph& g, const NoiseRealization& e, DecoderKind kind, int iters,
                std::uint64_t seed, DecodeResult* res, std::vector<std::vector<std::uint8_t>>* msgs) {
  const int ne = g.num_edges();
  const bool bec = e.channel == Channel::BEC;
  std::vector<std::uint8_t> v2c(ne), c2v(ne), next(ne);
  for (int i = 0; i < ne; ++i) v2c[i] = e.bad[g.edge_var[i]];

  if (res) res->trace.push_back(channel_only_stats(g, e));
  if (msgs) msgs->push_back(v2c);

  for (int t = 2; t <= iters; ++t) {
    // Check step. GalB: parity of bad inputs; LGalB and BEC erasure: any bad.
    for (int c = 0; c < g.m; ++c) {
      int cnt = 0;
      for (int ed : g.chk_edges[c]) cnt += v2c[ed];
      for (int ed : g.chk_edges[c]) {
        const int others = cnt - v2c[ed];
        c2v[ed] = kind == DecoderKind::GalB ? (others & 1) : (others >= 1);
      }
    }
    // Variable step.
    int bit_errors = 0;
    for (int v = 0; v < g.n; ++v) {
      int bad_in = 0;
      for (int ed : g.var_edges[v]) bad_in += c2v[ed];
      const int cb = e.bad[v];
      if (bec) {
        for (int ed : g.var_edges[v])
          next[ed] = cb && (bad_in - c2v[ed]) == g.l - 1;  // erased iff nothing known
        if (cb && bad_in == g.l) ++bit_errors;             // still erased
      } else {
        for (int ed : g.var_edges[v]) {
          const int bad_votes = bad_in - c2v[ed] + cb;  // among l-1 incoming + channel
          if (2 * bad_votes > g.l)
            next[ed] = 1;
          else if (2 * bad_votes == g.l)
            next[ed] = coin(seed, (std::uint64_t)ed, (std::uint64_t)t);
          else
            next[ed] = 0;
        }
        const int dec_bad = bad_in + cb;  // all l incoming + channel
        if (2 * dec_bad > g.l + 1)
          ++bit_errors;
        else if (2 * dec_bad == g.l + 1 &&
                 coin(seed, (std::uint64_t)(g.num_edges() + v), (std::uint64_t)t))
          ++bit_errors;
      }
    }
    v2c.swap(next);
    if (msgs) msgs->push_back(v2c);
    if (res) {
      IterationStats st;
      st.ber = (double)bit_errors / g.n;
      st.block_error = bit_errors > 0;
      int bad_edges = 0;
      for (int i = 0; i < ne; ++i) bad_edges += v2c[i];
      st.bad_edge_fraction = (double)bad_edges / ne;
      res->trace.push_back(st);
    }
  }
}

// MS / LMS on the integer message lattice (channel values mapped to +-1).
void run_minsum(const TannerGraph& g, const NoiseRealization& e, const DecoderSpec& spec, int iters,
                std::uint64_t seed, DecodeResult* res) {
  const int ne = g.num_edges();
  std::vector<long long> v2c(ne), c2v(ne);
  auto chan = [&](int v) { return e.bad[v] ? -1LL : 1LL; };
  for (int i = 0; i < ne; ++i) v2c[i] = chan(g.edge_var[i]);
  res->trace.push_back(channel_only_stats(g, e));

  for (int t = 2; t <= iters; ++t) {
    for (int c = 0; c < g.m; ++c) {
      if (spec.kind == DecoderKind::LMS) {
        long long min1 = std::numeric_limits<long long>::max(), min2 = min1;
        int idx1 = -1;
        for (int ed : g.chk_edges[c]) {
          if (v2c[ed] < min1) {
            min2 = min1;
            min1 = v2c[ed];
            idx1 = ed;
          } else if (v2c[ed] < min2) {
            min2 = v2c[ed];
          }
        }
        for (int ed : g.chk_edges[c]) c2v[ed] = (ed == idx1) ? min2 : min1;
      } else {
        int zeros = 0, negs = 0, idx1 = -1;
        long long min1 = std::numeric_limits<long long>::max(), min2 = min1;
        for (int ed : g.chk_edges[c]) {
          const long long m = v2c[ed];
          if (m == 0) {
            ++zeros;
            continue;
          }
          if (m < 0) ++negs;
          const long long a = std::llabs(m);
          if (a < min1) {
            min2 = min1;
            min1 = a;
            idx1 = ed;
          } else if (a < min2) {
            min2 = a;
          }
        }
        for (int ed : g.chk_edges[c]) {
          const bool self_zero = v2c[ed] == 0;
          if (zeros - (self_zero ? 1 : 0) >= 1) {
            c2v[ed] = 0;
            continue;
          }
          const int neg_others = negs - (!self_zero && v2c[ed] < 0 ? 1 : 0);
          const long long rel = (!self_zero && ed == idx1) ? min2 : min1;
          c2v[ed] = (neg_others & 1) ? -rel : rel;
        }
      }
      if (spec.M > 0)
        for (int ed : g.chk_edges[c])
          c2v[ed] = std::clamp(c2v[ed], -(long long)spec.M, (long long)spec.M);
    }
    int bit_errors = 0, bad_edges = 0;
    for (int v = 0; v < g.n; ++v) {
      long long sum = chan(v);
      for (int ed : g.var_edges[v]) sum += c2v[ed];
      for (int ed : g.var_edges[v]) {
        const long long out = sum - c2v[ed];
        v2c[ed] = out;
        if (out <= 0) ++bad_edges;
      }
      if (sum < 0)
        ++bit_errors;
      else if (sum == 0 && coin(seed, (std::uint64_t)(g.num_edges() + v), (std::uint64_t)t))
        ++bit_errors;
    }
    IterationStats st;
    st.ber = (double)bit_errors / g.n;
    st.block_error = bit_errors > 0;
    st.bad_edge_fraction = (double)bad_edges / ne;
    res->trace.push_back(st);
  }
}

// BP on log-likelihood reals over the BSC.
void run_bp(const TannerGraph& g, const NoiseRealization& e, const DecoderSpec& spec, int iters,
            std::uint64_t seed, DecodeResult* res) {
  const int ne = g.num_edges();
  double llr_mag = e.eps > 0.0 && e.eps < 1.0 ? std::log((1.0 - e.eps) / e.eps) : kLlrCap;
  llr_mag = std::min(llr_mag, kLlrCap);
  if (spec.channel_llr_bound > 0.0) llr_mag = std::min(llr_mag, spec.channel_llr_bound);
  auto chan = [&](int v) { return e.bad[v] ? -llr_mag : llr_mag; };

  std::vector<double> v2c(ne), c2v(ne);
  for (int i = 0; i < ne; ++i) v2c[i] = chan(g.edge_var[i]);
  res->trace.push_back(channel_only_stats(g, e));

  std::vector<double> th(g.r), prefix(g.r + 1), suffix(g.r + 1);
  for (int t = 2; t <= iters; ++t) {
    for (int c = 0; c < g.m; ++c) {
      const auto& ced = g.chk_edges[c];
      for (int k = 0; k < g.r; ++k) th[k] = std::tanh(0.5 * v2c[ced[k]]);
      prefix[0] = 1.0;
      for (int k = 0; k < g.r; ++k) prefix[k + 1] = prefix[k] * th[k];
      suffix[g.r] = 1.0;
      for (int k = g.r - 1; k >= 0; --k) suffix[k] = suffix[k + 1] * th[k];
      for (int k = 0; k < g.r; ++k) {
        double p = std::clamp(prefix[k] * suffix[k + 1], -1.0 + 1e-15, 1.0 - 1e-15);
        double out = 2.0 * std::atanh(p);
        out = std::clamp(out, -kLlrCap, kLlrCap);
        if (spec.M > 0) out = std::clamp(out, -(double)spec.M, (double)spec.M);
        c2v[ced[k]] = out;
      }
    }
    int bit_errors = 0, bad_edges = 0;
    for (int v = 0; v < g.n; ++v) {
      double sum = chan(v);
      for (int ed : g.var_edges[v]) sum += c2v[ed];
      for (int ed : g.var_edges[v]) {
        const double out = sum - c2v[ed];
        v2c[ed] = out;
        if (out <= 0.0) ++bad_edges;
      }
      if (sum < 0.0)
        ++bit_errors;
      else if (sum == 0.0 && coin(seed, (std::uint64_t)(g.num_edges() + v), (std::uint64_t)t))
        ++bit_errors;
    }
    IterationStats st;
    st.ber = (double)bit_errors / g.n;
    st.block_error = bit_errors > 0;
    st.bad_edge_fraction = (double)bad_edges / ne;
    res->trace.push_back(st);
  }
}

}  // namespace

DecodeResult run_decoder(const TannerGraph& g, const NoiseRealization& e, const DecoderSpec& spec,
                         int iters, std::uint64_t tie_seed) {
  if (e.n() != g.n) throw std::invalid_argument("run_decoder: noise length mismatch");
  if (iters < 1) throw std::invalid_argument("run_decoder: iters must be >= 1");
  DecodeResult res;
  if (e.channel == Channel::BEC) {
    if (spec.kind != DecoderKind::BP)
      throw std::invalid_argument("run_decoder: BEC supports only BP erasure decoding");
    run_binary(g, e, spec.kind, iters, tie_seed, &res, nullptr);
    return res;
  }
  switch (spec.kind) {
    case DecoderKind::GalB:
    case DecoderKind::LGalB:
      run_binary(g, e, spec.kind, iters, tie_seed, &res, nullptr);
      break;
    case DecoderKind::MS:
    case DecoderKind::LMS:
      run_minsum(g, e, spec, iters, tie_seed, &res);
      break;
    case DecoderKind::BP:
      run_bp(g, e, spec, iters, tie_seed, &res);
      break;
  }
  return res;
}

std::vector<std::vector<std::uint8_t>> run_binary_decoder_messages(const TannerGraph& g,
                                                                   const NoiseRealization& e,
                                                                   DecoderKind kind, int iters,
                                                                   std::uint64_t tie_seed) {
  if (kind != DecoderKind::GalB && kind != DecoderKind::LGalB)
    throw std::invalid_argument("run_binary_decoder_messages: GalB/LGalB only");
  if (e.n() != g.n) throw std::invalid_argument("run_binary_decoder_messages: noise length mismatch");
  std::vector<std::vector<std::uint8_t>> msgs;
  run_binary(g, e, kind, iters, tie_seed, nullptr, &msgs);
  return msgs;
}

}  // namespace ldpc
