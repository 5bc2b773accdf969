#include <doctest.h>

#include <set>

#include "ptdt/box_geometry.hpp"
#include "ptdt/dt_vertex.hpp"
#include "ptdt/errors.hpp"
#include "support.hpp"

using namespace ptdt;
using ptdt::testing::triples_up_to;

namespace {

Triple rotate(const Triple& mu) { return Triple{mu[1], mu[2], mu[0]}; }

}  // namespace

TEST_CASE("weights of minimal plane partitions") {
  const Triple mu{Partition{1}, Partition{2}, Partition{1}};
  CHECK(pp_weight(AsymptoticPP{}, mu) == -3);
  CHECK(pp_weight(AsymptoticPP{}, Triple{}) == 0);
  CHECK(is_asymptotic_pp(AsymptoticPP{}, mu));
  CHECK_FALSE(is_asymptotic_pp(AsymptoticPP{{Cell{3, 3, 3}}}, mu));
  CHECK_THROWS_AS(pp_weight(AsymptoticPP{{Cell{3, 3, 3}}}, mu), InvalidIdeal);
}

TEST_CASE("a plane partition with thirteen extra boxes") {
  // Grow thirteen extra boxes greedily, always stacking the lowest addable cell.
  const Triple mu{Partition{1, 1}, Partition{2, 1, 1}, Partition{2, 1, 1}};
  std::vector<Cell> extra;
  while (extra.size() < 13) {
    const std::vector<Cell> add = addable_cells(mu, extra);
    REQUIRE_FALSE(add.empty());
    extra.push_back(*std::min_element(add.begin(), add.end(), [](const Cell& a, const Cell& b) {
      return a.x + a.y + a.z < b.x + b.y + b.z || (a.x + a.y + a.z == b.x + b.y + b.z && a < b);
    }));
    std::sort(extra.begin(), extra.end());
    CHECK(is_asymptotic_pp(AsymptoticPP{extra}, mu));
  }
  // |II| = 6 and |III| = 3 for these legs.
  CHECK(pp_weight(AsymptoticPP{extra}, mu) == 13 - 6 - 2 * 3);
}

TEST_CASE("ordinary plane partitions") {
  const std::vector<BigInt> c = enumerate_asymptotic_pp(Triple{}, 5);
  CHECK(c == std::vector<BigInt>{1, 1, 3, 6, 13, 24});
  CHECK(dt_vertex(Triple{}, 5) == macmahon(5));
  CHECK(enumerate_asymptotic_pp(Triple{Partition{1}, Partition{}, Partition{}}, 0) == std::vector<BigInt>{1});
}

TEST_CASE("layered enumeration against the bounding-box scan") {
  for (const Triple& mu : triples_up_to(2)) {
    CAPTURE(triple_str(mu));
    const int k = 4;
    const int bound = constant_M(mu) + k + 1;
    CHECK(enumerate_asymptotic_pp(mu, k) == enumerate_asymptotic_pp_scan(mu, k, bound));
  }
}

TEST_CASE("enumerated plane partitions are ideals") {
  for (const Triple& mu : triples_up_to(1))
    for (int k = 0; k <= 3; ++k) {
      const std::vector<AsymptoticPP> ps = asymptotic_pps(mu, k);
      CHECK(static_cast<int>(ps.size()) == enumerate_asymptotic_pp(mu, k)[k]);
      std::set<std::vector<Cell>> distinct;
      for (const AsymptoticPP& pi : ps) {
        CHECK(is_asymptotic_pp(pi, mu));
        distinct.insert(pi.extra_boxes);
        for (const Cell& w : pi.extra_boxes) {
          const Region r = classify(w, mu).region;
          CHECK(r == Region::Outside);
          CHECK(in_octant(w));
          for (const Cell& b : back_neighbors(w)) {
            if (!in_octant(b)) continue;
            const Region rb = classify(b, mu).region;
            const bool covered = rb != Region::Outside ||
                                 std::binary_search(pi.extra_boxes.begin(), pi.extra_boxes.end(), b);
            CHECK(covered);
          }
        }
      }
      CHECK(distinct.size() == ps.size());
    }
}

TEST_CASE("DT vertex valuation and symmetry") {
  for (const Triple& mu : triples_up_to(2)) {
    CAPTURE(triple_str(mu));
    const RegionStats st = region_stats(mu);
    const int val = -st.II - 2 * st.III;
    const QLaurent v = dt_vertex(mu, val + 3);
    CHECK(v.valuation() == val);
    CHECK(v.coeff(val) == 1);
    CHECK(v.trunc() == val + 3);
    CHECK(v == dt_vertex(rotate(mu), val + 3));
  }
  const QLaurent v = dt_vertex(Triple{Partition{1}, Partition{2}, Partition{1}}, 0);
  CHECK(v == QLaurent::from_coeffs(-3, {1, 3, 9, 23}, 0));
}
