#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ldpc/birth_death.hpp"
#include "ldpc/channel.hpp"
#include "ldpc/de_discrete.hpp"
#include "ldpc/de_scalar.hpp"
#include "ldpc/de_witness.hpp"
#include "ldpc/decoder.hpp"
#include "ldpc/entropy.hpp"
#include "ldpc/expansion.hpp"
#include "ldpc/fkg.hpp"
#include "ldpc/rng.hpp"
#include "ldpc/rprocess.hpp"
#include "ldpc/tanner_graph.hpp"
#include "ldpc/witness.hpp"

namespace {

using ldpc::mix64;

struct Options {
  std::vector<int> l{};
  std::vector<int> r{};
  std::vector<std::string> decoders{};
  std::string channel = "bsc";
  std::vector<double> eps{};
  std::vector<long long> n{};
  int iters = 200;
  int seeds = 10;
  long long trials = 1000;
  double tol = 1e-6;
  std::string out;
  std::string format = "csv";
  std::string config_path;
  double gamma = 0.6;
  double delta = 1.0 / 11.0;
  double alpha = -1.0;
  double c = 2.0;
  int m = 2;
  int window = 0;
  int workers = 1;
  std::uint64_t master_seed = 1;
  bool trace = false;
};

// The config file always wins over command-line flags.
void apply_config(Options& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw std::runtime_error("cannot open config file: " + o.config_path);
  const auto j = nlohmann::json::parse(in);
  if (j.contains("l")) o.l = j["l"].get<std::vector<int>>();
  if (j.contains("r")) o.r = j["r"].get<std::vector<int>>();
  if (j.contains("decoder")) o.decoders = j["decoder"].get<std::vector<std::string>>();
  if (j.contains("channel")) o.channel = j["channel"].get<std::string>();
  if (j.contains("eps")) o.eps = j["eps"].get<std::vector<double>>();
  if (j.contains("n")) o.n = j["n"].get<std::vector<long long>>();
  if (j.contains("iters")) o.iters = j["iters"].get<int>();
  if (j.contains("seeds")) o.seeds = j["seeds"].get<int>();
  if (j.contains("trials")) o.trials = j["trials"].get<long long>();
  if (j.contains("tol")) o.tol = j["tol"].get<double>();
  if (j.contains("out")) o.out = j["out"].get<std::string>();
  if (j.contains("format")) o.format = j["format"].get<std::string>();
  if (j.contains("gamma")) o.gamma = j["gamma"].get<double>();
  if (j.contains("delta")) o.delta = j["delta"].get<double>();
  if (j.contains("alpha")) o.alpha = j["alpha"].get<double>();
  if (j.contains("c")) o.c = j["c"].get<double>();
  if (j.contains("m")) o.m = j["m"].get<int>();
  if (j.contains("window")) o.window = j["window"].get<int>();
  if (j.contains("workers")) o.workers = j["workers"].get<int>();
  if (j.contains("master_seed")) o.master_seed = j["master_seed"].get<std::uint64_t>();
  if (j.contains("trace")) o.trace = j["trace"].get<bool>();
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) {
    if (row.size() != headers.size()) throw std::logic_error("table row width mismatch");
    rows.push_back(std::move(row));
  }

  void write(const Options& o) const {
    std::ostringstream os;
    if (o.format == "csv") {
      for (std::size_t i = 0; i < headers.size(); ++i)
        os << headers[i] << (i + 1 < headers.size() ? "," : "\n");
      for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
          os << row[i] << (i + 1 < row.size() ? "," : "\n");
    } else if (o.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < headers.size(); ++i) obj[headers[i]] = row[i];
        arr.push_back(obj);
      }
      os << arr.dump(2) << "\n";
    } else {
      throw std::invalid_argument("unknown format: " + o.format);
    }
    if (o.out.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open output file: " + o.out);
      f << os.str();
    }
  }
};

// Runs fn(i) for i in [0, count) on the requested number of threads. Results
// land in a preallocated slot per index, so the output never depends on the
// thread count.
template <class Fn>
void parallel_for(long long count, int workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> pool;
  const int k = std::min<long long>(workers, count);
  pool.reserve(k);
  for (int w = 0; w < k; ++w)
    pool.emplace_back([&] {
      for (long long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

ldpc::DecoderKind parse_decoder(const std::string& name) {
  if (name == "galb") return ldpc::DecoderKind::GalB;
  if (name == "lgalb") return ldpc::DecoderKind::LGalB;
  if (name == "ms") return ldpc::DecoderKind::MS;
  if (name == "lms") return ldpc::DecoderKind::LMS;
  if (name == "bp") return ldpc::DecoderKind::BP;
  throw std::invalid_argument("unknown decoder: " + name);
}

ldpc::Channel parse_channel(const std::string& name) {
  if (name == "bsc") return ldpc::Channel::BSC;
  if (name == "bec") return ldpc::Channel::BEC;
  throw std::invalid_argument("unknown channel: " + name);
}

int cmd_thresholds(const Options& o) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> ls = o.l.empty() ? std::vector<int>{3, 4} : o.l;
  for (int l : ls) {
    if (!o.r.empty()) {
      for (int r : o.r) pairs.emplace_back(l, r);
    } else {
      for (int r = l; r <= 10; ++r) pairs.emplace_back(l, r);
    }
  }
  const auto decs = o.decoders.empty() ? std::vector<std::string>{"galb", "lgalb"} : o.decoders;

  Table t;
  t.headers = {"l",       "r",  "rate",      "eps_sha", "sha_lo", "sha_hi",
               "decoder", "status", "threshold", "lo",      "hi"};
  for (auto [l, r] : pairs) {
    const double rate = 1.0 - (double)l / r;
    const double sha = ldpc::shannon_threshold(rate);
    for (const auto& dec : decs) {
      std::string status = "ok", thr, lo, hi;
      if (dec == "galb" || dec == "lgalb") {
        ldpc::DEMap map =
            dec == "galb"
                ? ldpc::DEMap([=](double x, double e) { return ldpc::galb_de_step(x, e, l, r); })
                : ldpc::DEMap([=](double x, double e) { return ldpc::lgalb_map(x, e, l, r); });
        const auto res = ldpc::find_threshold(map, o.tol);
        thr = fmt(res.threshold);
        lo = fmt(res.lo);
        hi = fmt(res.hi);
      } else if (dec == "ms" || dec == "lms") {
        const double v = dec == "ms" ? ldpc::ms_threshold(o.m, l, r)
                                     : ldpc::lms_all_plus_m_boundary(o.m, l, r);
        thr = fmt(v);
        lo = fmt(v - o.tol);
        hi = fmt(v + o.tol);
      } else {
        status = "unsupported";
        thr = lo = hi = "nan";
      }
      t.add({std::to_string(l), std::to_string(r), fmt(rate), fmt(sha), fmt(sha - 1e-10),
             fmt(sha + 1e-10), dec, status, thr, lo, hi});
    }
  }
  t.write(o);
  return 0;
}

int cmd_sweep(const Options& o) {
  const auto ns = o.n.empty() ? std::vector<long long>{4096} : o.n;
  const auto epss = o.eps.empty() ? std::vector<double>{0.03} : o.eps;
  const std::string dec_name = o.decoders.empty() ? "lgalb" : o.decoders.front();
  const auto kind = parse_decoder(dec_name);
  const auto chan = parse_channel(o.channel);
  const int l = o.l.empty() ? 3 : o.l.front();
  const int r = o.r.empty() ? 6 : o.r.front();
  const int win_lo = o.window > 0 ? o.window : (3 * o.iters) / 4;

  struct Task {
    long long n;
    double eps;
    int seed;
    std::vector<ldpc::IterationStats> trace;
  };
  std::vector<Task> tasks;
  for (long long n : ns)
    for (double eps : epss)
      for (int s = 0; s < o.seeds; ++s) tasks.push_back({n, eps, s, {}});

  parallel_for((long long)tasks.size(), o.workers, [&](long long i) {
    auto& tk = tasks[i];
    const std::uint64_t key = mix64(o.master_seed, (std::uint64_t)tk.n,
                                    (std::uint64_t)tk.seed * 1000003 + (std::uint64_t)(tk.eps * 1e9));
    const auto g = ldpc::sample_regular_graph((int)tk.n, l, r, mix64(key, 0xA));
    const auto e = ldpc::sample_noise((int)tk.n, chan, tk.eps, mix64(key, 0xB));
    ldpc::DecoderSpec spec{kind, kind == ldpc::DecoderKind::MS || kind == ldpc::DecoderKind::LMS
                                     ? o.m
                                     : 0,
                           0.0};
    tk.trace = ldpc::run_decoder(g, e, spec, o.iters, mix64(key, 0xC)).trace;
  });

  Table t;
  t.headers = {"record", "n",   "eps",  "seed",           "iter",           "ber",
               "bad_edge_frac", "block", "window_max_ber", "window_min_ber", "mean", "se"};
  for (const auto& tk : tasks) {
    if (o.trace)
      for (int it = 1; it <= o.iters; ++it) {
        const auto& st = tk.trace[it - 1];
        t.add({"trace", std::to_string(tk.n), fmt(tk.eps), std::to_string(tk.seed),
               std::to_string(it), fmt(st.ber), fmt(st.bad_edge_fraction),
               st.block_error ? "1" : "0", "", "", "", ""});
      }
    double wmax = 0.0, wmin = 1.0;
    for (int it = win_lo; it <= o.iters; ++it) {
      wmax = std::max(wmax, tk.trace[it - 1].ber);
      wmin = std::min(wmin, tk.trace[it - 1].ber);
    }
    t.add({"summary", std::to_string(tk.n), fmt(tk.eps), std::to_string(tk.seed), "", "", "", "",
           fmt(wmax), fmt(wmin), "", ""});
  }
  for (long long n : ns)
    for (double eps : epss) {
      double sum = 0.0, sum2 = 0.0;
      int cnt = 0;
      for (const auto& tk : tasks) {
        if (tk.n != n || tk.eps != eps) continue;
        double wmax = 0.0;
        for (int it = win_lo; it <= o.iters; ++it) wmax = std::max(wmax, tk.trace[it - 1].ber);
        sum += wmax;
        sum2 += wmax * wmax;
        ++cnt;
      }
      const double mean = sum / cnt;
      const double var = std::max(0.0, sum2 / cnt - mean * mean);
      t.add({"aggregate", std::to_string(n), fmt(eps), "", "", "", "", "", "", "", fmt(mean),
             fmt(std::sqrt(var / cnt))});
    }
  t.write(o);
  return 0;
}

int cmd_witness(const Options& o) {
  const int l = o.l.empty() ? 3 : o.l.front();
  if (l != 3) throw std::invalid_argument("witness: only variable degree 3 is supported");
  const int r = o.r.empty() ? 6 : o.r.front();
  const double eps = o.eps.empty() ? 0.03 : o.eps.front();
  const long long n = o.n.empty() ? 10000 : o.n.front();
  const int max_depth = std::max(2, std::min(o.iters, 64));

  std::vector<std::vector<double>> frac(o.seeds);  // per seed, per depth
  parallel_for(o.seeds, o.workers, [&](long long s) {
    const std::uint64_t key = mix64(o.master_seed, 0x77, (std::uint64_t)s);
    const auto g = ldpc::sample_regular_graph((int)n, l, r, mix64(key, 0xA));
    const auto e = ldpc::sample_noise((int)n, ldpc::Channel::BSC, eps, mix64(key, 0xB));
    auto& row = frac[s];
    for (int depth = 2; depth <= max_depth; ++depth)
      row.push_back((double)ldpc::build_witness(g, e, depth).size() / n);
  });

  auto st = ldpc::witness_de_init(eps);
  Table t;
  t.headers = {"depth", "trials", "mean_size_frac", "se", "de_envelope"};
  for (int depth = 2; depth <= max_depth; ++depth) {
    st = ldpc::witness_de_step(st, eps, r);
    double sum = 0.0, sum2 = 0.0;
    for (int s = 0; s < o.seeds; ++s) {
      const double v = frac[s][depth - 2];
      sum += v;
      sum2 += v * v;
    }
    const double mean = sum / o.seeds;
    const double var = std::max(0.0, sum2 / o.seeds - mean * mean);
    t.add({std::to_string(depth), std::to_string(o.seeds), fmt(mean),
           fmt(std::sqrt(var / o.seeds)), fmt(l * st.p.der)});
  }
  t.write(o);
  return 0;
}

int cmd_rprocess(const Options& o) {
  ldpc::RParams p;
  p.r = o.r.empty() ? 6 : o.r.front();
  p.eps = o.eps.empty() ? 0.05 : o.eps.front();
  p.delta = o.delta;
  const auto s0s = o.n.empty() ? std::vector<long long>{50, 100, 200, 400} : o.n;

  Table t;
  t.headers = {"s0", "trials", "mean_iinf", "se", "c", "frac_ge_cs0", "se_frac"};
  for (long long s0 : s0s) {
    std::vector<long long> iinf(o.trials);
    parallel_for(o.trials, o.workers, [&](long long i) {
      iinf[i] = ldpc::greedy_run(p, s0, mix64(o.master_seed, (std::uint64_t)s0, (std::uint64_t)i))
                    .i_inf;
    });
    double sum = 0.0, sum2 = 0.0;
    long long hits = 0;
    for (long long v : iinf) {
      sum += (double)v;
      sum2 += (double)v * v;
      if ((double)v >= o.c * s0) ++hits;
    }
    const double mean = sum / o.trials;
    const double var = std::max(0.0, sum2 / o.trials - mean * mean);
    const double fr = (double)hits / o.trials;
    t.add({std::to_string(s0), std::to_string(o.trials), fmt(mean), fmt(std::sqrt(var / o.trials)),
           fmt(o.c), fmt(fr), fmt(std::sqrt(fr * (1 - fr) / o.trials))});
  }
  t.write(o);
  return 0;
}

int cmd_fkg(const Options& o) {
  const int dim = o.n.empty() ? 8 : (int)o.n.front();
  if (dim < 1 || dim > 10) throw std::invalid_argument("fkg: dimension must be in [1,10]");
  const auto epss = o.eps.empty() ? std::vector<double>{0.1, 0.3, 0.5} : o.eps;

  std::vector<int> inc_fail(o.trials, 0), dec_fail(o.trials, 0);
  parallel_for(o.trials, o.workers, [&](long long i) {
    auto eng = ldpc::derive_engine(o.master_seed, (std::uint64_t)i);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto gen = [&] {
      std::vector<double> f(1ULL << dim);
      for (std::uint64_t mask = 0; mask < f.size(); ++mask) {
        double base = 0.0;
        for (int b = 0; b < dim; ++b)
          if (mask & (1ULL << b)) base = std::max(base, f[mask ^ (1ULL << b)]);
        f[mask] = base + u(eng);
      }
      return f;
    };
    const auto f = gen(), g = gen();
    auto neg = [](std::vector<double> v) {
      double top = 0.0;
      for (double x : v) top = std::max(top, x);
      for (double& x : v) x = top - x;
      return v;
    };
    const auto nf = neg(f), ng = neg(g);
    for (double eps : epss) {
      if (!ldpc::fkg_verify(eps, f, g, ldpc::Monotonicity::Increasing)) inc_fail[i] = 1;
      if (!ldpc::fkg_verify(eps, nf, ng, ldpc::Monotonicity::Decreasing)) dec_fail[i] = 1;
    }
  });

  int inc = 0, dec = 0;
  for (long long i = 0; i < o.trials; ++i) {
    inc += inc_fail[i];
    dec += dec_fail[i];
  }
  Table t;
  t.headers = {"n", "trials", "direction", "violations", "pass"};
  t.add({std::to_string(dim), std::to_string(o.trials), "increasing", std::to_string(inc),
         inc == 0 ? "1" : "0"});
  t.add({std::to_string(dim), std::to_string(o.trials), "decreasing", std::to_string(dec),
         dec == 0 ? "1" : "0"});
  t.write(o);
  return inc + dec == 0 ? 0 : 2;
}

int cmd_expansion(const Options& o) {
  const int l = o.l.empty() ? 3 : o.l.front();
  const int r = o.r.empty() ? 6 : o.r.front();
  const double am = ldpc::alpha_max(l, r, o.gamma);
  const double gr = o.gamma * r;
  const double residual = (double)(l - 1) / l * ldpc::binary_entropy(am) -
                          1.0 / r * ldpc::binary_entropy(am * gr) -
                          am * gr * ldpc::binary_entropy(1.0 / gr);
  Table t;
  t.headers = {"record", "l", "r", "gamma", "alpha_max", "residual", "n", "seed", "alpha", "ok"};
  t.add({"alpha_max", std::to_string(l), std::to_string(r), fmt(o.gamma), fmt(am), fmt(residual),
         "", "", "", ""});
  if (!o.n.empty()) {
    const double alpha = o.alpha > 0.0 ? o.alpha : am;
    for (long long n : o.n)
      for (int s = 0; s < o.seeds; ++s) {
        const auto g =
            ldpc::sample_regular_graph((int)n, l, r, mix64(o.master_seed, (std::uint64_t)n, s));
        const bool ok =
            ldpc::check_expander(g, ldpc::ExpansionSpec{alpha, o.gamma, ldpc::ExpanderSide::Left});
        t.add({"check", std::to_string(l), std::to_string(r), fmt(o.gamma), "", "",
               std::to_string(n), std::to_string(s), fmt(alpha), ok ? "1" : "0"});
      }
  }
  t.write(o);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"LDPC iterative-decoding toolkit"};
  app.require_subcommand(1);

  app.add_option("--config", o.config_path, "JSON config file; its values override flags");
  app.add_option("--l", o.l, "variable degree(s)");
  app.add_option("--r", o.r, "check degree(s)");
  app.add_option("--decoder", o.decoders, "decoder name(s): galb lgalb ms lms bp");
  app.add_option("--channel", o.channel, "bsc or bec");
  app.add_option("--eps", o.eps, "channel parameter grid");
  app.add_option("--n", o.n, "blocklength grid (or S0 grid / fkg dimension)");
  app.add_option("--iters", o.iters, "decoder iterations");
  app.add_option("--seeds", o.seeds, "number of seeds");
  app.add_option("--trials", o.trials, "number of trials");
  app.add_option("--tol", o.tol, "bisection tolerance");
  app.add_option("--out", o.out, "output path (default stdout)");
  app.add_option("--format", o.format, "csv or json");
  app.add_option("--gamma", o.gamma, "expansion fraction");
  app.add_option("--delta", o.delta, "exploration slack parameter");
  app.add_option("--alpha", o.alpha, "subset fraction for expander checks");
  app.add_option("--c", o.c, "tail threshold multiplier");
  app.add_option("--M", o.m, "message clip for ms/lms");
  app.add_option("--window", o.window, "first iteration of the trailing window");
  app.add_option("--workers", o.workers, "worker threads");
  app.add_option("--master-seed", o.master_seed, "master seed");
  app.add_flag("--trace", o.trace, "emit per-iteration rows in sweep");

  auto* thresholds = app.add_subcommand("thresholds", "decoding threshold tables");
  auto* sweep = app.add_subcommand("sweep", "finite-length decoder sweeps");
  auto* witness = app.add_subcommand("witness", "witness size measurements");
  auto* rprocess = app.add_subcommand("rprocess", "exploration process statistics");
  auto* fkg = app.add_subcommand("fkg", "correlation inequality verification");
  auto* expansion = app.add_subcommand("expansion", "vertex expansion constants");
  for (auto* sub : {thresholds, sweep, witness, rprocess, fkg, expansion}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    apply_config(o);
    if (thresholds->parsed()) return cmd_thresholds(o);
    if (sweep->parsed()) return cmd_sweep(o);
    if (witness->parsed()) return cmd_witness(o);
    if (rprocess->parsed()) return cmd_rprocess(o);
    if (fkg->parsed()) return cmd_fkg(o);
    if (expansion->parsed()) return cmd_expansion(o);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
