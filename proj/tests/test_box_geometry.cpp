#include <doctest.h>

#include <random>
#include <set>

#include "ptdt/box_geometry.hpp"
#include "support.hpp"

using namespace ptdt;
using ptdt::testing::triples_up_to;

TEST_CASE("cylinders") {
  CHECK(in_cylinder({-5, 0, 0}, 1, Partition{1}));
  CHECK_FALSE(in_cylinder({0, 1, 0}, 1, Partition{1}));
  CHECK(in_cylinder({0, 0, 7}, 3, Partition{2, 1}));
  CHECK(in_cylinder({1, 0, 7}, 3, Partition{2, 1}));
  CHECK_FALSE(in_cylinder({0, 0, 7}, 3, Partition{}));
  for (int i = 1; i <= 3; ++i) CHECK(cylinder_axis(i) == i - 1);
}

TEST_CASE("classify on worked examples") {
  const Triple mu{Partition{1}, Partition{2}, Partition{1}};
  CHECK(classify({0, 0, 0}, mu).region == Region::III);
  const RegionTag t = classify({0, 0, 1}, mu);
  CHECK(t.region == Region::II);
  CHECK(t.index == 1);
  CHECK(classify({-3, 0, 0}, mu).region == Region::IMinus);
  CHECK(classify({-3, 0, 0}, mu).index == 1);
  CHECK(classify({5, 5, 5}, mu).region == Region::Outside);
  CHECK(region_stats(mu) == RegionStats{1, 1, 2});
  CHECK(region_stats(Triple{}) == RegionStats{0, 0, 0});
  const Triple fig{Partition{1, 1}, Partition{2, 1, 1}, Partition{2, 1, 1}};
  CHECK(region_stats(fig) == RegionStats{6, 3, 3});
  const RegionCells rc = region_cells(fig);
  CHECK(rc.III == std::vector<Cell>{{0, 0, 0}, {0, 0, 1}, {1, 0, 0}});
}

TEST_CASE("neighbors") {
  const auto b = back_neighbors({0, 0, 0});
  CHECK(std::set<Cell>(b.begin(), b.end()) == std::set<Cell>{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
  const auto b2 = back_neighbors({1, 2, 3});
  CHECK(std::set<Cell>(b2.begin(), b2.end()) == std::set<Cell>{{0, 2, 3}, {1, 1, 3}, {1, 2, 2}});
  for (const Cell& w : front_neighbors({1, 2, 3})) {
    const auto back = back_neighbors(w);
    CHECK(std::find(back.begin(), back.end(), Cell{1, 2, 3}) != back.end());
  }
  CHECK(face_neighbors({0, 0, 0}).size() == 6);
}

TEST_CASE("region structure over small triples") {
  for (const Triple& mu : triples_up_to(2)) {
    CAPTURE(triple_str(mu));
    const RegionStats st = region_stats(mu);
    const int M = constant_M(mu);
    CHECK(st.M == M);
    int ii = 0, iii = 0;
    std::array<int, 4> ii_by_index{};
    // Scan a padded box; the finite regions must sit inside [0, M-1]^3.
    for (int x = -2; x <= M + 2; ++x)
      for (int y = -2; y <= M + 2; ++y)
        for (int z = -2; z <= M + 2; ++z) {
          const Cell w{x, y, z};
          int n = 0;
          for (int i = 1; i <= 3; ++i) n += in_cylinder(w, i, mu[i - 1]);
          const RegionTag t = classify(w, mu);
          if (!in_octant(w)) {
            CHECK(t.region == (n > 0 ? Region::IMinus : Region::Outside));
            continue;
          }
          const Region expect = n == 3 ? Region::III : n == 2 ? Region::II : n == 1 ? Region::IPlus : Region::Outside;
          CHECK(t.region == expect);
          if (t.region == Region::II || t.region == Region::III) {
            CHECK(x < M);
            CHECK(y < M);
            CHECK(z < M);
          }
          if (t.region == Region::II) {
            ++ii;
            ++ii_by_index[t.index];
            CHECK_FALSE(in_cylinder(w, t.index, mu[t.index - 1]));
          }
          if (t.region == Region::III) {
            ++iii;
            for (const Cell& b : back_neighbors(w)) {
              const Region r = classify(b, mu).region;
              CHECK((r == Region::IMinus || r == Region::III));
            }
          }
        }
    CHECK(st.II == ii);
    CHECK(st.III == iii);
    CHECK(ii_by_index[1] + ii_by_index[2] + ii_by_index[3] == ii);
    const RegionCells rc = region_cells(mu);
    CHECK(static_cast<int>(rc.II.size()) == ii);
    CHECK(static_cast<int>(rc.III.size()) == iii);
  }
}

TEST_CASE("back neighbors stay in the cylinder") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int it = 0; it < 3000; ++it) {
    const Partition p = ptdt::testing::random_partition(rng, 5, true);
    const Cell w{coord(rng), coord(rng), coord(rng)};
    for (int j = 1; j <= 3; ++j) {
      if (!in_cylinder(w, j, p)) continue;
      for (int i = 0; i < 3; ++i)
        if (i == cylinder_axis(j) || w[i] > 0) CHECK(in_cylinder(w - unit(i), j, p));
    }
  }
}
