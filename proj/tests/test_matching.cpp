#include <doctest.h>

#include <random>

#include "ptdt/honeycomb.hpp"
#include "ptdt/matching.hpp"

using namespace ptdt;

namespace {

int index_of(const std::vector<Tri>& idx, const Tri& t) {
  return static_cast<int>(std::find(idx.begin(), idx.end(), t) - idx.begin());
}

}  // namespace

TEST_CASE("perfect matchings of small graphs") {
  // A 4-cycle a-b-c-d with exponents 0, 1, 2, 3.
  WeightedGraph g;
  g.adj.resize(4);
  g.color = {0, 1, 0, 1};
  g.px = {0, 1, 1, 0};
  g.py = {0, 0, 1, 1};
  g.add_edge(0, 1, 0);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 3, 2);
  g.add_edge(3, 0, 3);
  CHECK(dimer_polynomial(g) == QLaurent::polynomial({{2, 1}, {4, 1}}));
  CHECK(dimer_polynomial_naive(g) == dimer_polynomial(g));
  CHECK(dimer_min_weight(g) == 2);
  CHECK(all_matchings(g, std::vector<char>(4, 0)).size() == 2);
  // Both matchings together form one loop.
  const auto ms = all_matchings(g, std::vector<char>(4, 0));
  const DoubleDimerDecomposition d = decompose_double_dimer(ms[0], ms[1]);
  CHECK(d.loops == 1);
  CHECK(d.doubled == 0);
  CHECK(d.paths.empty());
  const DoubleDimerDecomposition same = decompose_double_dimer(ms[0], ms[0]);
  CHECK(same.loops == 0);
  CHECK(same.doubled == 2);
  // Odd graphs have no perfect matching.
  WeightedGraph odd;
  odd.adj.resize(1);
  odd.color = {0};
  odd.px = {0};
  odd.py = {0};
  CHECK(dimer_polynomial(odd).is_zero());
  CHECK_FALSE(dimer_min_weight(odd).has_value());
}

TEST_CASE("double-dimer sums with no nodes square the dimer sum") {
  for (int N = 1; N <= 3; ++N) {
    const WeightedGraph g = build_h(N).weighted();
    const QLaurent z = dimer_polynomial(g);
    CHECK(double_dimer_polynomial(g, {}, {}) == z * z);
    if (N <= 2) CHECK(double_dimer_polynomial_naive(g, {}, {}) == z * z);
  }
}

TEST_CASE("double-dimer DP against pair enumeration") {
  std::mt19937 rng(1);
  std::vector<Tri> idx;
  const WeightedGraph g = build_h(2).weighted(&idx);
  const std::vector<Tri> cyc = boundary_cycle(2);
  int nonzero = 0;
  for (int it = 0; it < 120; ++it) {
    std::vector<int> pos(cyc.size());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = static_cast<int>(i);
    std::shuffle(pos.begin(), pos.end(), rng);
    const int k = 2 * (1 + static_cast<int>(rng() % 3));
    std::vector<int> sel(pos.begin(), pos.begin() + k);
    std::sort(sel.begin(), sel.end());
    std::vector<int> nodes;
    for (int p : sel) nodes.push_back(index_of(idx, cyc[p]));
    // Adjacent pairs after a rotation give a planar pairing.
    const int r = static_cast<int>(rng() % k);
    NodePairing pr;
    for (int i = 0; i < k; i += 2) {
      const int a = nodes[(i + r) % k], b = nodes[(i + 1 + r) % k];
      pr.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(pr.begin(), pr.end());
    const QLaurent z = double_dimer_polynomial(g, nodes, pr);
    CHECK(z == double_dimer_polynomial_naive(g, nodes, pr));
    nonzero += !z.is_zero();
  }
  CHECK(nonzero > 20);
}

TEST_CASE("crossing pairings carry no configurations") {
  std::vector<Tri> idx;
  const WeightedGraph g = build_h(2).weighted(&idx);
  const std::vector<Tri> cyc = boundary_cycle(2);
  const int n = static_cast<int>(cyc.size());
  for (int s = 0; s < n; ++s) {
    std::vector<int> v;
    for (int j = 0; j < 4; ++j) v.push_back(index_of(idx, cyc[(s + j * (n / 4)) % n]));
    NodePairing crossing{{std::min(v[0], v[2]), std::max(v[0], v[2])}, {std::min(v[1], v[3]), std::max(v[1], v[3])}};
    std::sort(crossing.begin(), crossing.end());
    CHECK(double_dimer_polynomial(g, v, crossing).is_zero());
  }
}
