#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <vector>

#include "ptdt/partition.hpp"

namespace ptdt {

struct Cell {
  int x = 0, y = 0, z = 0;
  int operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  auto operator<=>(const Cell&) const = default;
};

inline Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

std::ostream& operator<<(std::ostream& os, const Cell& c);

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::size_t>(c.y) * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(c.z) * 0x165667B19E3779F9ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Unit vectors e_1, e_2, e_3 (axis 0, 1, 2).
Cell unit(int axis);

bool in_octant(const Cell& w);
int negative_coordinates(const Cell& w);
inline bool in_R1(const Cell& w) { return negative_coordinates(w) >= 1; }
inline bool in_R2(const Cell& w) { return negative_coordinates(w) >= 2; }

// Cylinder i in {1, 2, 3}: Cyl_1 = {(x,u,v)}, Cyl_2 = {(v,y,u)}, Cyl_3 = {(u,v,z)}, (u,v) in mu_i.
bool in_cylinder(const Cell& w, int i, const Partition& mu_i);
// The free axis of cylinder i (0-based coordinate index).
int cylinder_axis(int i);

enum class Region { Outside, IMinus, IPlus, II, III };

struct RegionTag {
  Region region = Region::Outside;
  // IMinus, IPlus: the cylinder containing w. II: the missing cylinder (II_{i bar}).
  int index = 0;
  auto operator<=>(const RegionTag&) const = default;
};

RegionTag classify(const Cell& w, const Triple& mu);

std::array<Cell, 3> back_neighbors(const Cell& w);
std::array<Cell, 3> front_neighbors(const Cell& w);
std::array<Cell, 6> face_neighbors(const Cell& w);

int constant_M(const Triple& mu);

struct RegionStats {
  int II = 0;
  int III = 0;
  int M = 0;
  bool operator==(const RegionStats&) const = default;
};

RegionStats region_stats(const Triple& mu);

struct RegionCells {
  std::vector<Cell> II;
  std::vector<int> II_index;
  std::vector<Cell> III;
  std::vector<Cell> IPlus;
};

// Finite regions, scanned over [0, M]^3.
RegionCells region_cells(const Triple& mu);

}  // namespace ptdt
