#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ptdt/qlaurent.hpp"

namespace ptdt {

// Exact counts inside the transfer DP; overflow raises instead of wrapping.
__extension__ typedef unsigned __int128 Count;

// Bipartite graph with integer edge exponents and planar positions for the sweep.
struct WeightedGraph {
  struct Arc {
    int to;
    int exponent;
  };
  std::vector<std::vector<Arc>> adj;
  std::vector<int> color;  // 0 or 1
  std::vector<double> px, py;

  int size() const { return static_cast<int>(adj.size()); }
  void add_edge(int a, int b, int exponent);
};

// Sweep order with the smallest neighbor gap over six directions.
std::vector<int> sweep_order(const WeightedGraph& g);

// Weighted enumeration of perfect matchings as an exact polynomial (column transfer DP).
QLaurent dimer_polynomial(const WeightedGraph& g);
// Independent recursive matcher; used as the oracle for small graphs.
QLaurent dimer_polynomial_naive(const WeightedGraph& g);
// Lowest exponent over perfect matchings; nullopt if none exists.
std::optional<int> dimer_min_weight(const WeightedGraph& g);

// A node pairing: pairs of vertex indices of g.
using NodePairing = std::vector<std::pair<int, int>>;

// Sum over double-dimer configurations with the given nodes whose paths realise
// `pairing`, weighted by q^{edge exponents} 2^{loops}.
QLaurent double_dimer_polynomial(const WeightedGraph& g, const std::vector<int>& nodes,
                                 const NodePairing& pairing);

// Oracle: enumerate every ordered pair of matchings and trace the paths.
QLaurent double_dimer_polynomial_naive(const WeightedGraph& g, const std::vector<int>& nodes,
                                       const NodePairing& pairing);

// All perfect matchings of g minus `removed` (as partner arrays); small graphs only.
std::vector<std::vector<int>> all_matchings(const WeightedGraph& g, const std::vector<char>& removed);

// Union of two partial matchings given as partner arrays (-1 = unmatched).
struct DoubleDimerDecomposition {
  NodePairing paths;                 // node-to-node paths (endpoints, sorted pairs)
  std::vector<std::vector<int>> path_vertices;
  int loops = 0;                     // cycles of length >= 4
  int doubled = 0;                   // doubled edges
  bool valid = true;
};

DoubleDimerDecomposition decompose_double_dimer(const std::vector<int>& m1, const std::vector<int>& m2);

BigInt to_bigint(Count c);

}  // namespace ptdt
