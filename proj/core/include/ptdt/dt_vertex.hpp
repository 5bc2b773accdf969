#pragma once

#include <vector>

#include "ptdt/box_geometry.hpp"
#include "ptdt/partition.hpp"
#include "ptdt/qlaurent.hpp"

namespace ptdt {

// A plane partition asymptotic to mu: the base I^+ + II + III plus finitely many extra boxes.
struct AsymptoticPP {
  std::vector<Cell> extra_boxes;  // sorted
};

bool is_asymptotic_pp(const AsymptoticPP& pi, const Triple& mu);

// w(pi) = #extra - |II| - 2|III|; throws InvalidIdeal.
int pp_weight(const AsymptoticPP& pi, const Triple& mu);

// Cells outside the base whose in-octant back neighbors are all covered; extra must be sorted.
std::vector<Cell> addable_cells(const Triple& mu, const std::vector<Cell>& extra);

// counts[k] = number of asymptotic plane partitions with k extra boxes, k <= k_max.
std::vector<BigInt> enumerate_asymptotic_pp(const Triple& mu, int k_max);

// Oracle: same counts, scanning every cell of [0, bound]^3 for addable boxes at each step.
std::vector<BigInt> enumerate_asymptotic_pp_scan(const Triple& mu, int k_max, int bound);

// All asymptotic plane partitions with exactly k extra boxes.
std::vector<AsymptoticPP> asymptotic_pps(const Triple& mu, int k);

// V(mu) truncated at exponent T.
QLaurent dt_vertex(const Triple& mu, int T);

}  // namespace ptdt
