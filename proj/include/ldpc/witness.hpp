#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldpc/channel.hpp"
#include "ldpc/tanner_graph.hpp"

namespace ldpc {

/// A directed edge of a witness: graph edge index with its endpoints and the
/// orientation it is used with inside the forest.
struct WitnessEdge {
  int edge = -1;
  int var = -1;
  int chk = -1;
  bool var_to_check = true;
  auto operator<=>(const WitnessEdge&) const = default;
};

/// Minimal explanation of why the bad variable-to-check messages at a given
/// iteration are bad under LGalB: a subgraph together with the received
/// values of its variables. Rerunning the decoder with those values (and
/// arbitrary values elsewhere) reproduces the root messages as bad.
struct WitnessForest {
  int depth = 0;                               ///< iteration the roots are bad at
  std::vector<WitnessEdge> edges;              ///< sorted, unique
  std::vector<std::pair<int, std::uint8_t>> vars;  ///< (variable, received value), sorted
  std::vector<int> roots;                      ///< root edge indices, sorted
  int size() const { return (int)vars.size(); }
  bool operator==(const WitnessForest&) const = default;
};

/// Builds the witness of the bad v->c messages at iteration depth (>= 1) of
/// LGalB on (g, e), for variable degree 3. A bad message at a variable with
/// a bad received value is explained by the received value at depth 1, or by
/// the smallest-index bad incoming check edge otherwise; at a good variable
/// both incoming check edges must be bad and both are included. A bad check
/// output is explained by its smallest-index bad input.
WitnessForest build_witness(const TannerGraph& g, const NoiseRealization& e, int depth);

/// True if every edge of w exists in g with the same endpoints.
bool witness_in_graph(const WitnessForest& w, const TannerGraph& g);

/// Enumerates assignments of the variables outside w (the free variables,
/// listed in increasing index order) whose full received word makes
/// build_witness return exactly w. Throws std::invalid_argument if w is not
/// a subgraph of g; throws std::length_error if there are more than
/// max_free free variables.
struct WitnessErrorSets {
  std::vector<int> free_vars;                        ///< increasing
  std::vector<std::vector<std::uint8_t>> assignments;  ///< one value per free var
};
WitnessErrorSets error_sets_for_witness(const TannerGraph& g, const WitnessForest& w, double eps,
                                        int max_free = 20);

/// Noise word that equals w's values on its variables and the given
/// assignment on free_vars (all other variables good).
NoiseRealization compose_noise(const TannerGraph& g, const WitnessForest& w,
                               const std::vector<int>& free_vars,
                               const std::vector<std::uint8_t>& assignment, double eps);

std::string witness_to_json(const WitnessForest& w);
WitnessForest witness_from_json(const std::string& text);

}  // namespace ldpc
