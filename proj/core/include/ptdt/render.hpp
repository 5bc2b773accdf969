#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptdt/double_dimer.hpp"
#include "ptdt/honeycomb.hpp"

namespace ptdt {

// Lozenge tiling of H(N) drawn from the matched edges; unmatched vertices are marked.
std::string render_tiling_svg(int N, const std::vector<HEdge>& edges, const std::vector<Tri>& marked = {});

// Both matchings of a double-dimer configuration with colored nodes.
std::string render_dd_svg(const DoubleDimerConfig& d, const NodeSet& ns);

// Adjacency dump: vertices, edges with exponents.
nlohmann::json graph_json(const HoneycombGraph& g);

}  // namespace ptdt
