#include "ptdt/box_geometry.hpp"

#include <algorithm>

namespace ptdt {

std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << "(" << c.x << "," << c.y << "," << c.z << ")";
}

Cell unit(int axis) {
  Cell c;
  if (axis == 0) c.x = 1;
  if (axis == 1) c.y = 1;
  if (axis == 2) c.z = 1;
  return c;
}

bool in_octant(const Cell& w) { return w.x >= 0 && w.y >= 0 && w.z >= 0; }

int negative_coordinates(const Cell& w) { return (w.x < 0) + (w.y < 0) + (w.z < 0); }

int cylinder_axis(int i) { return i - 1; }

bool in_cylinder(const Cell& w, int i, const Partition& mu_i) {
  switch (i) {
    case 1: return mu_i.contains(w.y, w.z);
    case 2: return mu_i.contains(w.z, w.x);
    case 3: return mu_i.contains(w.x, w.y);
    default: return false;
  }
}

RegionTag classify(const Cell& w, const Triple& mu) {
  std::array<bool, 3> c{};
  int count = 0;
  for (int i = 1; i <= 3; ++i) {
    c[static_cast<std::size_t>(i - 1)] = in_cylinder(w, i, mu[static_cast<std::size_t>(i - 1)]);
    count += c[static_cast<std::size_t>(i - 1)];
  }
  if (!in_octant(w)) {
    for (int i = 1; i <= 3; ++i)
      if (c[static_cast<std::size_t>(i - 1)]) return {Region::IMinus, i};
    return {};
  }
  if (count == 3) return {Region::III, 0};
  if (count == 2) {
    for (int i = 1; i <= 3; ++i)
      if (!c[static_cast<std::size_t>(i - 1)]) return {Region::II, i};
  }
  if (count == 1) {
    for (int i = 1; i <= 3; ++i)
      if (c[static_cast<std::size_t>(i - 1)]) return {Region::IPlus, i};
  }
  return {};
}

std::array<Cell, 3> back_neighbors(const Cell& w) {
  return {Cell{w.x - 1, w.y, w.z}, Cell{w.x, w.y - 1, w.z}, Cell{w.x, w.y, w.z - 1}};
}

std::array<Cell, 3> front_neighbors(const Cell& w) {
  return {Cell{w.x + 1, w.y, w.z}, Cell{w.x, w.y + 1, w.z}, Cell{w.x, w.y, w.z + 1}};
}

std::array<Cell, 6> face_neighbors(const Cell& w) {
  return {Cell{w.x - 1, w.y, w.z}, Cell{w.x, w.y - 1, w.z}, Cell{w.x, w.y, w.z - 1},
          Cell{w.x + 1, w.y, w.z}, Cell{w.x, w.y + 1, w.z}, Cell{w.x, w.y, w.z + 1}};
}

int constant_M(const Triple& mu) {
  int m = 0;
  for (const auto& p : mu) m = std::max({m, p(1), p.length()});
  return m;
}

RegionCells region_cells(const Triple& mu) {
  RegionCells out;
  const int m = constant_M(mu);
  for (int x = 0; x <= m; ++x)
    for (int y = 0; y <= m; ++y)
      for (int z = 0; z <= m; ++z) {
        const Cell w{x, y, z};
        const RegionTag t = classify(w, mu);
        if (t.region == Region::II) {
          out.II.push_back(w);
          out.II_index.push_back(t.index);
        } else if (t.region == Region::III) {
          out.III.push_back(w);
        } else if (t.region == Region::IPlus) {
          out.IPlus.push_back(w);
        }
      }
  return out;
}

RegionStats region_stats(const Triple& mu) {
  const RegionCells cells = region_cells(mu);
  return {static_cast<int>(cells.II.size()), static_cast<int>(cells.III.size()), constant_M(mu)};
}

}  // namespace ptdt
