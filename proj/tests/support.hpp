// Shared helpers for the test suites and the acceptance runner.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "ptdt/double_dimer.hpp"
#include "ptdt/honeycomb.hpp"
#include "ptdt/partition.hpp"

namespace ptdt::testing {

// Every triple with |mu_i| <= n.
inline std::vector<Triple> triples_up_to(int n) {
  const std::vector<Partition> ps = partitions_up_to(n);
  std::vector<Triple> out;
  for (const Partition& a : ps)
    for (const Partition& b : ps)
      for (const Partition& c : ps) out.push_back(Triple{a, b, c});
  return out;
}

inline Partition random_partition(std::mt19937& rng, int max_size, bool nonempty) {
  std::uniform_int_distribution<int> size(nonempty ? 1 : 0, max_size);
  const std::vector<Partition> ps = partitions_of(size(rng));
  return ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)];
}

// Boundary vertices a, b, c, d of H(N) in cyclic order with a, c white and b, d black.
inline std::array<Tri, 4> random_kuo_tuple(std::mt19937& rng, int N) {
  const std::vector<Tri> cyc = boundary_cycle(N);
  const int n = static_cast<int>(cyc.size());
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (;;) {
    std::vector<int> idx(4);
    for (int& i : idx) i = pick(rng);
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) continue;
    const std::array<Tri, 4> q{cyc[idx[0]], cyc[idx[1]], cyc[idx[2]], cyc[idx[3]]};
    if (q[0].nabla && !q[1].nabla && q[2].nabla && !q[3].nabla) return q;
  }
}

// Colored boundary nodes satisfying the triangle inequality, with a condensation
// quadruple covering all three colors.
struct DDInstance {
  NodeSet ns;
  Tri a, b, c, d;
};

inline bool triangle_ok(int r, int g, int b) {
  return (r + g + b) % 2 == 0 && r <= g + b && g <= r + b && b <= r + g;
}

inline std::optional<DDInstance> random_dd_instance(std::mt19937& rng, int N, int max_nodes) {
  const std::vector<Tri> cyc = boundary_cycle(N);
  const int n = static_cast<int>(cyc.size());
  std::uniform_int_distribution<int> count(4, std::min(max_nodes, n));
  const int k = count(rng);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[i] = i;
  std::shuffle(pos.begin(), pos.end(), rng);
  pos.resize(k);
  std::sort(pos.begin(), pos.end());
  // Three contiguous color arcs, starting at a random rotation.
  std::uniform_int_distribution<int> cut(1, k - 1);
  int c1 = cut(rng), c2 = cut(rng);
  if (c1 > c2) std::swap(c1, c2);
  if (c1 == c2) return std::nullopt;
  if (!triangle_ok(c1, c2 - c1, k - c2)) return std::nullopt;
  const int rot = std::uniform_int_distribution<int>(0, k - 1)(rng);
  std::vector<Node> nodes;
  for (int j = 0; j < k; ++j) {
    const int slot = (j + rot) % k;
    const NodeColor col = j < c1 ? NodeColor::Red : j < c2 ? NodeColor::Green : NodeColor::Blue;
    nodes.push_back(Node{cyc[pos[slot]], 0, 0, col});
  }
  DDInstance inst{make_node_set(N, nodes), {}, {}, {}, {}};
  const auto& ns = inst.ns.nodes;
  std::vector<int> idx(4);
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    for (int& i : idx) i = pick(rng);
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) continue;
    const Tri a = ns[idx[0]].vertex, b = ns[idx[1]].vertex, c = ns[idx[2]].vertex, d = ns[idx[3]].vertex;
    if (!(a.nabla == c.nabla && b.nabla == d.nabla && a.nabla != b.nabla)) continue;
    std::vector<NodeColor> cols{ns[idx[0]].color, ns[idx[1]].color, ns[idx[2]].color, ns[idx[3]].color};
    std::sort(cols.begin(), cols.end());
    if (std::unique(cols.begin(), cols.end()) - cols.begin() != 3) continue;
    // Each of the six node sets needs a tripartite pairing.
    bool ok = true;
    for (const std::vector<Tri>& gone : std::vector<std::vector<Tri>>{{}, {a, b, c, d}, {a, b}, {c, d}, {a, d}, {b, c}}) {
      const NodeSet sub = without_nodes(inst.ns, gone);
      if (!triangle_ok(sub.count(NodeColor::Red), sub.count(NodeColor::Green), sub.count(NodeColor::Blue))) ok = false;
    }
    if (!ok) continue;
    inst.a = a, inst.b = b, inst.c = c, inst.d = d;
    return inst;
  }
  return std::nullopt;
}

}  // namespace ptdt::testing
