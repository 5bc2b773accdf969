#include "ptdt/dt_vertex.hpp"

#include <algorithm>
#include <set>

#include "ptdt/errors.hpp"
#include "ptdt/parallel.hpp"

namespace ptdt {

namespace {

bool in_base(const Cell& w, const Triple& mu) {
  if (!in_octant(w)) return false;
  for (int i = 1; i <= 3; ++i)
    if (in_cylinder(w, i, mu[static_cast<std::size_t>(i - 1)])) return true;
  return false;
}

bool covered(const Cell& w, const Triple& mu, const std::vector<Cell>& extra) {
  return in_base(w, mu) || std::binary_search(extra.begin(), extra.end(), w);
}

bool addable(const Cell& w, const Triple& mu, const std::vector<Cell>& extra) {
  if (!in_octant(w) || covered(w, mu, extra)) return false;
  for (const Cell& b : back_neighbors(w))
    if (in_octant(b) && !covered(b, mu, extra)) return false;
  return true;
}

using Layer = std::set<std::vector<Cell>>;

template <class Candidates>
Layer expand(const Layer& layer, const Candidates& candidates) {
  const std::vector<std::vector<Cell>> states(layer.begin(), layer.end());
  std::vector<Layer> parts(states.size());
  parallel_for(states.size(), [&](std::size_t i) {
    for (const Cell& w : candidates(states[i])) {
      std::vector<Cell> next = states[i];
      next.insert(std::upper_bound(next.begin(), next.end(), w), w);
      parts[i].insert(std::move(next));
    }
  });
  Layer out;
  for (auto& p : parts) out.merge(p);
  return out;
}

template <class Candidates>
std::vector<Layer> layers(int k_max, const Candidates& candidates) {
  std::vector<Layer> out{Layer{std::vector<Cell>{}}};
  for (int k = 1; k <= k_max; ++k) out.push_back(expand(out.back(), candidates));
  return out;
}

std::vector<Cell> base_addable(const Triple& mu) {
  // Without extras, addable cells lie in [0, M]^3.
  const int M = constant_M(mu);
  std::vector<Cell> out;
  for (int x = 0; x <= M; ++x)
    for (int y = 0; y <= M; ++y)
      for (int z = 0; z <= M; ++z)
        if (addable(Cell{x, y, z}, mu, {})) out.push_back(Cell{x, y, z});
  return out;
}

// Candidates: base-addable cells plus front neighbors of extra boxes.
auto frontier(const Triple& mu) {
  return [mu, base = base_addable(mu)](const std::vector<Cell>& extra) {
    std::set<Cell> c(base.begin(), base.end());
    for (const Cell& e : extra)
      for (const Cell& f : front_neighbors(e)) c.insert(f);
    std::vector<Cell> out;
    for (const Cell& w : c)
      if (addable(w, mu, extra)) out.push_back(w);
    return out;
  };
}

}  // namespace

bool is_asymptotic_pp(const AsymptoticPP& pi, const Triple& mu) {
  const auto& e = pi.extra_boxes;
  if (!std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end()) return false;
  for (const Cell& w : e) {
    if (!in_octant(w) || in_base(w, mu)) return false;
    for (const Cell& b : back_neighbors(w))
      if (in_octant(b) && !covered(b, mu, e)) return false;
  }
  return true;
}

int pp_weight(const AsymptoticPP& pi, const Triple& mu) {
  if (!is_asymptotic_pp(pi, mu)) throw InvalidIdeal("extra boxes do not form an order ideal with the base");
  const RegionStats st = region_stats(mu);
  return static_cast<int>(pi.extra_boxes.size()) - st.II - 2 * st.III;
}

std::vector<Cell> addable_cells(const Triple& mu, const std::vector<Cell>& extra) { return frontier(mu)(extra); }

std::vector<AsymptoticPP> asymptotic_pps(const Triple& mu, int k) {
  if (k < 0) return {};
  const auto ls = layers(k, frontier(mu));
  std::vector<AsymptoticPP> out;
  for (const auto& s : ls.back()) out.push_back(AsymptoticPP{s});
  return out;
}

std::vector<BigInt> enumerate_asymptotic_pp(const Triple& mu, int k_max) {
  std::vector<BigInt> out;
  if (k_max < 0) return out;
  for (const auto& l : layers(k_max, frontier(mu))) out.emplace_back(l.size());
  return out;
}

std::vector<BigInt> enumerate_asymptotic_pp_scan(const Triple& mu, int k_max, int bound) {
  std::vector<BigInt> out;
  if (k_max < 0) return out;
  auto cands = [&](const std::vector<Cell>& extra) {
    std::vector<Cell> res;
    for (int x = 0; x <= bound; ++x)
      for (int y = 0; y <= bound; ++y)
        for (int z = 0; z <= bound; ++z)
          if (addable(Cell{x, y, z}, mu, extra)) res.push_back(Cell{x, y, z});
    return res;
  };
  for (const auto& l : layers(k_max, cands)) out.emplace_back(l.size());
  return out;
}

QLaurent dt_vertex(const Triple& mu, int T) {
  const RegionStats st = region_stats(mu);
  const int val = -st.II - 2 * st.III;
  return QLaurent::from_coeffs(val, enumerate_asymptotic_pp(mu, T - val), T);
}

}  // namespace ptdt
