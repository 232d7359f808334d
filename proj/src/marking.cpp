#include "ldpc/marking.hpp"

#include <stdexcept>

#include "ldpc/rng.hpp"

namespace ldpc {

MarkingResult run_marking(const TannerGraph& g, const NoiseRealization& e,
                          const std::vector<int>& initial_vc_edges, MarkSchedule schedule,
                          std::uint64_t seed) {
  if (e.n() != g.n) throw std::invalid_argument("run_marking: noise length mismatch");
  const int ne = g.num_edges();

  // Directed facts, one bit per edge and orientation. A fact never unfires,
  // so every edge is processed at most twice and the closure is unique.
  std::vector<std::uint8_t> vc(ne), cv(ne);
  std::vector<std::uint8_t> marked(g.n), internal(g.n), init_marked(g.n);
  std::vector<int> cv_count(g.n, 0);

  std::vector<int> work;  // directed fact ids: 2*edge + (0: v->c, 1: c->v)
  work.reserve(2 * ne);

  auto fire_vc = [&](int ed) {
    if (vc[ed]) return;
    vc[ed] = 1;
    work.push_back(2 * ed);
  };
  auto fire_cv = [&](int ed) {
    if (cv[ed]) return;
    cv[ed] = 1;
    work.push_back(2 * ed + 1);
  };

  for (int ed : initial_vc_edges) {
    if (ed < 0 || ed >= ne) throw std::out_of_range("run_marking: edge index out of range");
    const int v = g.edge_var[ed];
    marked[v] = 1;
    init_marked[v] = 1;
    fire_vc(ed);
  }

  auto engine = derive_engine(seed, 0x6d61726bULL);
  std::size_t head = 0;
  while (head < work.size()) {
    std::size_t pick = head;
    switch (schedule) {
      case MarkSchedule::Fifo:
        break;
      case MarkSchedule::Lifo:
        pick = work.size() - 1;
        break;
      case MarkSchedule::Random:
        pick = head + engine() % (work.size() - head);
        break;
    }
    std::swap(work[head], work[pick]);
    const int fact = work[head++];
    const int ed = fact / 2;
    if ((fact & 1) == 0) {
      for (int other : g.chk_edges[g.edge_chk[ed]])
        if (other != ed) fire_cv(other);
    } else {
      const int v = g.edge_var[ed];
      ++cv_count[v];
      const bool was_marked = marked[v];
      marked[v] = 1;
      const bool propagate = e.bad[v] || init_marked[v] || was_marked;
      if (propagate && !internal[v]) {
        internal[v] = 1;
        for (int out : g.var_edges[v]) fire_vc(out);
      }
    }
  }

  MarkingResult res;
  res.marked = std::move(marked);
  res.internal_ = std::move(internal);
  for (std::uint8_t f : res.marked) res.marked_count += f;
  return res;
}

}  // namespace ldpc
