#include "ldpc/witness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "ldpc/decoder.hpp"

namespace ldpc {

namespace {

struct Builder {
  const TannerGraph& g;
  const NoiseRealization& e;
  const std::vector<std::vector<std::uint8_t>>& msgs;
  std::set<WitnessEdge> edges;
  std::map<int, std::uint8_t> vars;
  std::set<std::pair<int, int>> seen_var;  // (edge, iter)
  std::set<std::pair<int, int>> seen_chk;

  // Is the check output on edge ed (towards its variable) bad at iteration
  // it? It is computed from the v->c messages of iteration it-1.
  bool check_bad(int ed, int it) const {
    for (int other : g.chk_edges[g.edge_chk[ed]])
      if (other != ed && msgs[it - 2][other]) return true;
    return false;
  }

  void grow_chk(int ed, int it);

  void grow_var(int ed, int it) {
    if (!seen_var.insert({ed, it}).second) return;
    const int v = g.edge_var[ed];
    vars.emplace(v, e.bad[v]);
    if (it == 1) return;  // explained by the received value alone
    if (e.bad[v]) {
      int best = -1;
      for (int other : g.var_edges[v])
        if (other != ed && check_bad(other, it) && (best < 0 || other < best)) best = other;
      if (best < 0) throw std::logic_error("build_witness: bad message without bad input");
      edges.insert({best, v, g.edge_chk[best], false});
      grow_chk(best, it);
    } else {
      for (int other : g.var_edges[v]) {
        if (other == ed) continue;
        if (!check_bad(other, it))
          throw std::logic_error("build_witness: good variable with a good input");
        edges.insert({other, v, g.edge_chk[other], false});
        grow_chk(other, it);
      }
    }
  }
};

void Builder::grow_chk(int ed, int it) {
  if (!seen_chk.insert({ed, it}).second) return;
  int best = -1;
  for (int other : g.chk_edges[g.edge_chk[ed]])
    if (other != ed && msgs[it - 2][other] && (best < 0 || other < best)) best = other;
  if (best < 0) throw std::logic_error("build_witness: bad check output without bad input");
  edges.insert({best, g.edge_var[best], g.edge_chk[best], true});
  grow_var(best, it - 1);
}

}  // namespace

WitnessForest build_witness(const TannerGraph& g, const NoiseRealization& e, int depth) {
  if (g.l != 3) throw std::invalid_argument("build_witness: variable degree must be 3");
  if (depth < 1) throw std::invalid_argument("build_witness: depth must be >= 1");
  const auto msgs = run_binary_decoder_messages(g, e, DecoderKind::LGalB, depth, 0);

  Builder b{g, e, msgs, {}, {}, {}, {}};
  WitnessForest w;
  w.depth = depth;
  for (int ed = 0; ed < g.num_edges(); ++ed) {
    if (!msgs[depth - 1][ed]) continue;
    w.roots.push_back(ed);
    b.edges.insert({ed, g.edge_var[ed], g.edge_chk[ed], true});
    b.grow_var(ed, depth);
  }
  w.edges.assign(b.edges.begin(), b.edges.end());
  w.vars.assign(b.vars.begin(), b.vars.end());
  return w;
}

bool witness_in_graph(const WitnessForest& w, const TannerGraph& g) {
  for (const auto& we : w.edges) {
    if (we.edge < 0 || we.edge >= g.num_edges()) return false;
    if (g.edge_var[we.edge] != we.var || g.edge_chk[we.edge] != we.chk) return false;
  }
  for (const auto& [v, val] : w.vars)
    if (v < 0 || v >= g.n) return false;
  return true;
}

NoiseRealization compose_noise(const TannerGraph& g, const WitnessForest& w,
                               const std::vector<int>& free_vars,
                               const std::vector<std::uint8_t>& assignment, double eps) {
  if (free_vars.size() != assignment.size())
    throw std::invalid_argument("compose_noise: assignment length mismatch");
  NoiseRealization e;
  e.channel = Channel::BSC;
  e.eps = eps;
  e.bad.assign(g.n, 0);
  for (const auto& [v, val] : w.vars) e.bad[v] = val;
  for (std::size_t i = 0; i < free_vars.size(); ++i) e.bad[free_vars[i]] = assignment[i];
  return e;
}

WitnessErrorSets error_sets_for_witness(const TannerGraph& g, const WitnessForest& w, double eps,
                                        int max_free) {
  if (!witness_in_graph(w, g))
    throw std::invalid_argument("error_sets_for_witness: witness is not a subgraph");
  std::vector<std::uint8_t> in_w(g.n, 0);
  for (const auto& [v, val] : w.vars) in_w[v] = 1;
  WitnessErrorSets out;
  for (int v = 0; v < g.n; ++v)
    if (!in_w[v]) out.free_vars.push_back(v);
  const int k = (int)out.free_vars.size();
  if (k > max_free) throw std::length_error("error_sets_for_witness: too many free variables");
  std::vector<std::uint8_t> asg(k);
  for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
    for (int i = 0; i < k; ++i) asg[i] = (mask >> i) & 1;
    const auto e = compose_noise(g, w, out.free_vars, asg, eps);
    if (build_witness(g, e, w.depth) == w) out.assignments.push_back(asg);
  }
  return out;
}

std::string witness_to_json(const WitnessForest& w) {
  nlohmann::json j;
  j["depth"] = w.depth;
  j["roots"] = w.roots;
  auto& je = j["edges"] = nlohmann::json::array();
  for (const auto& we : w.edges)
    je.push_back({{"edge", we.edge},
                  {"var", we.var},
                  {"chk", we.chk},
                  {"dir", we.var_to_check ? "vc" : "cv"}});
  auto& jv = j["vars"] = nlohmann::json::array();
  for (const auto& [v, val] : w.vars) jv.push_back({{"var", v}, {"value", (int)val}});
  return j.dump(2);
}

WitnessForest witness_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  WitnessForest w;
  w.depth = j.at("depth").get<int>();
  w.roots = j.at("roots").get<std::vector<int>>();
  for (const auto& je : j.at("edges"))
    w.edges.push_back({je.at("edge").get<int>(), je.at("var").get<int>(), je.at("chk").get<int>(),
                       je.at("dir").get<std::string>() == "vc"});
  for (const auto& jv : j.at("vars"))
    w.vars.push_back({jv.at("var").get<int>(), (std::uint8_t)jv.at("value").get<int>()});
  std::sort(w.edges.begin(), w.edges.end());
  std::sort(w.vars.begin(), w.vars.end());
  std::sort(w.roots.begin(), w.roots.end());
  return w;
}

}  // namespace ldpc
