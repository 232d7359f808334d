#include "ldpc/tanner_graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ldpc/rng.hpp"

namespace ldpc {

bool TannerGraph::valid() const {
  if (m * r != n * l) return false;
  if ((int)edge_var.size() != n * l || (int)edge_chk.size() != n * l) return false;
  if ((int)var_edges.size() != n || (int)chk_edges.size() != m) return false;
  for (const auto& ve : var_edges)
    if ((int)ve.size() != l) return false;
  for (const auto& ce : chk_edges)
    if ((int)ce.size() != r) return false;
  std::vector<int> seen(n * l, 0);
  for (int v = 0; v < n; ++v)
    for (int e : var_edges[v]) {
      if (e < 0 || e >= n * l || edge_var[e] != v) return false;
      ++seen[e];
    }
  for (int c = 0; c < m; ++c)
    for (int e : chk_edges[c])
      if (edge_chk[e] != c) return false;
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

TannerGraph sample_regular_graph(int n, int l, int r, std::uint64_t seed) {
  if (n <= 0 || l <= 0 || r <= 0) throw std::invalid_argument("sample_regular_graph: degrees and n must be positive");
  if ((n * l) % r != 0) throw std::invalid_argument("sample_regular_graph: n*l not divisible by r");
  if (n < r) throw std::invalid_argument("sample_regular_graph: n < r");

  TannerGraph g;
  g.n = n;
  g.l = l;
  g.r = r;
  g.m = n * l / r;

  const int ne = n * l;
  std::vector<int> sockets(ne);
  std::iota(sockets.begin(), sockets.end(), 0);
  auto rng = derive_engine(seed, 0);
  std::shuffle(sockets.begin(), sockets.end(), rng);

  g.edge_var.resize(ne);
  g.edge_chk.resize(ne);
  g.var_edges.assign(n, {});
  g.chk_edges.assign(g.m, {});
  for (int e = 0; e < ne; ++e) {
    const int v = e / l;
    const int c = sockets[e] / r;
    g.edge_var[e] = v;
    g.edge_chk[e] = c;
    g.var_edges[v].push_back(e);
    g.chk_edges[c].push_back(e);
  }

  for (int v = 0; v < n; ++v) {
    std::multiset<int> nb;
    for (int e : g.var_edges[v]) nb.insert(g.edge_chk[e]);
    for (auto it = nb.begin(); it != nb.end();) {
      const int cnt = (int)nb.count(*it);
      g.multi_edge_count += cnt * (cnt - 1) / 2;
      std::advance(it, cnt);
    }
  }
  return g;
}

void write_graph(std::ostream& os, const TannerGraph& g) {
  os << g.n << ' ' << g.m << ' ' << g.l << ' ' << g.r << '\n';
  for (int e = 0; e < g.num_edges(); ++e)
    os << e << ' ' << g.edge_var[e] << ' ' << g.edge_chk[e] << '\n';
}

TannerGraph read_graph(std::istream& is) {
  TannerGraph g;
  if (!(is >> g.n >> g.m >> g.l >> g.r)) throw std::runtime_error("read_graph: bad header");
  const int ne = g.n * g.l;
  g.edge_var.resize(ne);
  g.edge_chk.resize(ne);
  g.var_edges.assign(g.n, {});
  g.chk_edges.assign(g.m, {});
  for (int i = 0; i < ne; ++i) {
    int e, v, c;
    if (!(is >> e >> v >> c)) throw std::runtime_error("read_graph: truncated edge list");
    if (e != i) throw std::runtime_error("read_graph: edges out of order");
    g.edge_var[e] = v;
    g.edge_chk[e] = c;
    g.var_edges[v].push_back(e);
    g.chk_edges[c].push_back(e);
  }
  if (!g.valid()) throw std::runtime_error("read_graph: degree invariants violated");
  // Recover the multi-edge diagnostic.
  for (int v = 0; v < g.n; ++v) {
    std::multiset<int> nb;
    for (int e : g.var_edges[v]) nb.insert(g.edge_chk[e]);
    for (auto it = nb.begin(); it != nb.end();) {
      const int cnt = (int)nb.count(*it);
      g.multi_edge_count += cnt * (cnt - 1) / 2;
      std::advance(it, cnt);
    }
  }
  return g;
}

}  // namespace ldpc
