#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "ptdt/dt_vertex.hpp"
#include "ptdt/errors.hpp"
#include "ptdt/honeycomb.hpp"
#include "ptdt/matching.hpp"
#include "support.hpp"

using namespace ptdt;
using ptdt::testing::triples_up_to;

namespace {

// q^{|pi|} summed over plane partitions inside an n x n x n box.
QLaurent boxed_plane_partitions(int n) {
  std::map<int, BigInt> terms;
  std::vector<int> a(n * n, 0);
  std::function<void(int, int)> rec = [&](int i, int total) {
    if (i == n * n) {
      terms[total] += 1;
      return;
    }
    const int r = i / n, c = i % n;
    const int cap = std::min(r > 0 ? a[i - n] : n, c > 0 ? a[i - 1] : n);
    for (int v = 0; v <= cap; ++v) {
      a[i] = v;
      rec(i + 1, total + v);
    }
    a[i] = 0;
  };
  rec(0, 0);
  return QLaurent::polynomial(terms);
}

BigInt value_at_one(const QLaurent& p) {
  BigInt s = 0;
  for (const BigInt& c : p.coeffs()) s += c;
  return s;
}

}  // namespace

TEST_CASE("H(N) shape and edge weights") {
  const HoneycombGraph h1 = build_h(1);
  CHECK(h1.vertex_count() == 6);
  std::set<int> exps;
  for (const HEdge& e : h1.edges())
    if (e.type == 3) exps.insert(edge_exponent(1, e));
  CHECK(exps == std::set<int>{0, 1});

  const HoneycombGraph h3 = build_h(3);
  std::map<int, int> by_exponent;
  for (const HEdge& e : h3.edges())
    if (e.type == 3) ++by_exponent[edge_exponent(3, e)];
  CHECK(by_exponent == std::map<int, int>{{0, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 4}, {5, 3}});
  for (const HEdge& e : h3.edges())
    if (e.type != 3) CHECK(edge_exponent(3, e) == 0);

  for (int N = 1; N <= 4; ++N)
    for (Convention conv : {Convention::DT, Convention::PT}) {
      const HoneycombGraph h = build_h(N, conv);
      std::set<Tri> seen;
      for (int i = 1; i <= 3; ++i)
        for (int t = 1; t <= N; ++t)
          for (int sign : {1, -1}) {
            const Tri v = label_vertex(conv, N, i, sign * (2 * t - 1));
            CHECK(h.on_outer_boundary(v));
            seen.insert(v);
          }
      CHECK(static_cast<int>(seen.size()) == 6 * N);
      CHECK_THROWS_AS(label_vertex(conv, N, 1, 2 * N + 1), LabelOutOfRange);
    }
}

TEST_CASE("dimer partition function of H(N)") {
  CHECK(dimer_z(build_h(1)) == QLaurent::polynomial({{0, 1}, {1, 1}}));
  const long expected[] = {0, 2, 20, 980};
  for (int N = 1; N <= 3; ++N) {
    const QLaurent z = dimer_z(build_h(N));
    CHECK(z == dimer_z_naive(build_h(N)));
    CHECK(value_at_one(z) == expected[N]);
    CHECK(z == scale_monomial(boxed_plane_partitions(N), N * N * (N - 1) / 2));
    CHECK(minimal_matching_weight(build_h(N)) == N * N * (N - 1) / 2);
    const auto& c = z.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == c[c.size() - 1 - i]);
  }
  CHECK(value_at_one(dimer_z(build_h(4))) == 232848);
}

TEST_CASE("maya removals") {
  const HoneycombGraph h = build_h(3);
  CHECK(remove_for_maya(h, Triple{}).vertex_count() == h.vertex_count());
  const HoneycombGraph g = remove_for_maya(h, Triple{Partition{1}, Partition{}, Partition{}});
  CHECK(g.vertex_count() == h.vertex_count() - 2);
  CHECK(std::set<Tri>(g.removed().begin(), g.removed().end()) ==
        std::set<Tri>{label_vertex(Convention::DT, 3, 1, 1), label_vertex(Convention::DT, 3, 1, -1)});
  const Triple fig{Partition{3, 2}, Partition{2, 2}, Partition{2, 1}};
  const HoneycombGraph g7 = remove_for_maya(build_h(7), fig);
  CHECK(dimer_min_weight(g7.weighted()).has_value());
}

TEST_CASE("transfer DP against the recursive matcher on vertex-deleted graphs") {
  std::mt19937 rng(3);
  for (int N = 1; N <= 3; ++N) {
    const HoneycombGraph h = build_h(N);
    const std::vector<Tri> cyc = boundary_cycle(N);
    for (int it = 0; it < 40; ++it) {
      std::vector<Tri> black, white;
      for (const Tri& t : cyc) (t.nabla ? white : black).push_back(t);
      std::shuffle(black.begin(), black.end(), rng);
      std::shuffle(white.begin(), white.end(), rng);
      const int k = std::uniform_int_distribution<int>(0, std::min<int>(3, black.size()))(rng);
      std::vector<Tri> gone(black.begin(), black.begin() + k);
      gone.insert(gone.end(), white.begin(), white.begin() + k);
      const HoneycombGraph g = h.without(gone);
      const QLaurent z = dimer_z(g);
      CHECK(z == dimer_z_naive(g));
      const auto mw = dimer_min_weight(g.weighted());
      CHECK(mw.has_value() == !z.is_zero());
      if (mw) CHECK(*mw == z.valuation());
    }
  }
}

TEST_CASE("DT tilings and the box-to-dimer weight step") {
  for (const Triple& mu : triples_up_to(2)) {
    CAPTURE(triple_str(mu));
    const int M = constant_M(mu);
    const int N = M + 3;
    const HoneycombGraph g = remove_for_maya(build_h(N), mu);
    const Truncation base = truncate_surface(dt_surface(mu), N);
    // The minimal tiling leaves exactly the deleted vertices unmatched.
    CHECK(std::set<Tri>(base.nodes.begin(), base.nodes.end()) == std::set<Tri>(g.removed().begin(), g.removed().end()));
    const QLaurent z = dimer_z(g);
    CHECK(z.valuation() == base.weight);
    CHECK(z.coeff(base.weight) == 1);
    for (int k = 1; k <= 2; ++k)
      for (const AsymptoticPP& pi : asymptotic_pps(mu, k)) {
        bool inside = true;
        for (const Cell& w : pi.extra_boxes) inside = inside && hex_radius(face_of(w)) < N;
        if (!inside) continue;
        const Truncation t = truncate_surface(dt_surface(mu, pi.extra_boxes), N);
        CHECK(t.weight == base.weight + k);
      }
  }
}

TEST_CASE("dimer convergence to the DT vertex") {
  const QLaurent e = dt_via_dimers(Triple{}, 2);
  CHECK(qs_eq_to_order(e, macmahon(2), 0, 2));
  const Triple one{Partition{1}, Partition{}, Partition{}};
  const QLaurent d = dt_via_dimers(one, 3);
  CHECK(d.trunc() == 2);
  CHECK(qs_eq_to_order(d, dt_vertex(one, 2), 0, 2));
  for (const Triple& mu : triples_up_to(1)) {
    const int M = constant_M(mu);
    for (int N = std::max(M, 1) + 1; N <= M + 3; ++N) {
      const QLaurent v = dt_via_dimers(mu, N);
      CHECK(qs_eq_to_order(v, dt_vertex(mu, v.trunc()), v.valuation(), v.trunc()));
    }
  }
}

TEST_CASE("Kuo condensation") {
  {
    const Triple mu{Partition{1}, Partition{1}, Partition{}};
    const KuoNodes k = kuo_nodes(mu, 2);
    const Triple rc{mu_rc(mu[0]), mu_rc(mu[1]), mu[2]};
    CHECK(kuo_condensation_check(remove_for_maya(build_h(2), rc), k.a, k.b, k.c, k.d).holds);
  }
  {
    const std::vector<Tri> cyc = boundary_cycle(1);
    REQUIRE(cyc.size() == 6);
    std::vector<Tri> q;
    const int start = cyc[0].nabla ? 0 : 1;
    for (int i = 0; i < 4; ++i) q.push_back(cyc[(start + i) % 6]);
    const KuoResult r = kuo_condensation_check(build_h(1), q[0], q[1], q[2], q[3]);
    CHECK(r.holds);
    CHECK_FALSE(r.lhs.is_zero());
  }
  std::mt19937 rng(5);
  for (int it = 0; it < 15; ++it) {
    const auto q = ptdt::testing::random_kuo_tuple(rng, 3);
    CHECK(kuo_condensation_check(build_h(3), q[0], q[1], q[2], q[3]).holds);
  }
  const auto q = ptdt::testing::random_kuo_tuple(rng, 2);
  CHECK_THROWS_AS(kuo_condensation_check(build_h(2), q[1], q[0], q[2], q[3]), BadNodeChoice);
}
