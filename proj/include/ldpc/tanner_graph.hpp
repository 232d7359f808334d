#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ldpc {

/// Bipartite (l,r)-regular multigraph with a fixed global edge order.
/// Edge indices 0..n*l-1 are the canonical tie-breaking order everywhere
/// a "smallest edge" is needed.
struct TannerGraph {
  int n = 0;  ///< variable nodes
  int m = 0;  ///< check nodes
  int l = 0;  ///< variable degree
  int r = 0;  ///< check degree

  std::vector<int> edge_var;  ///< edge index -> variable node
  std::vector<int> edge_chk;  ///< edge index -> check node

  std::vector<std::vector<int>> var_edges;  ///< per variable, ordered edge list (size l)
  std::vector<std::vector<int>> chk_edges;  ///< per check, ordered edge list (size r)

  int multi_edge_count = 0;  ///< diagnostics: pairs of parallel edges

  int num_edges() const { return n * l; }

  /// Degree and index invariants; cheap enough to call from tests.
  bool valid() const;
};

/// Configuration-model sample: uniformly random pairing of variable sockets
/// to check sockets. Multi-edges are kept (rejecting them would bias the
/// ensemble); their count is reported in multi_edge_count.
/// Requires n*l divisible by r and n >= r; throws std::invalid_argument.
TannerGraph sample_regular_graph(int n, int l, int r, std::uint64_t seed);

/// Textual adjacency format: header "n m l r", then one "edge var chk" line
/// per edge in edge-index order. Round-trips exactly.
void write_graph(std::ostream& os, const TannerGraph& g);
TannerGraph read_graph(std::istream& is);

}  // namespace ldpc
