#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "ptdt/box_geometry.hpp"
#include "ptdt/matching.hpp"
#include "ptdt/partition.hpp"
#include "ptdt/qlaurent.hpp"

namespace ptdt {

// Triangles of the triangular lattice are the vertices of the honeycomb graph.
// Lattice points (u, v) are the honeycomb faces. With e1 = (1,0), e2 = (0,1):
//   delta (black):  {r, r+e1, r+e1+e2}
//   nabla (white):  {r, r+e2, r+e1+e2}
struct Tri {
  bool nabla = false;
  int u = 0, v = 0;
  auto operator<=>(const Tri&) const = default;
};

inline Tri delta(int u, int v) { return {false, u, v}; }
inline Tri nabla(int u, int v) { return {true, u, v}; }

std::ostream& operator<<(std::ostream& os, const Tri& t);

struct Face {
  int u = 0, v = 0;
  auto operator<=>(const Face&) const = default;
};

// The face (column of cells along (1,1,1)) containing a cell.
inline Face face_of(const Cell& w) { return {w.x - w.z, w.y - w.z}; }
int hex_radius(Face f);
std::array<Face, 3> tri_corners(const Tri& t);
std::array<Face, 6> face_neighbors(const Face& f);

// Honeycomb edge between a black (delta) and a white (nabla) triangle.
struct HEdge {
  Tri black;
  Tri white;
  int type = 0;  // 3 = horizontal
  auto operator<=>(const HEdge&) const = default;
};

// Three edges at a triangle, in type order 1, 2, 3.
std::array<HEdge, 3> incident_edges(const Tri& t);
Tri other_end(const HEdge& e, const Tri& t);

// Horizontal edges carry q^{N - (v + 1)}; all others q^0.
int edge_exponent(int N, const HEdge& e);

enum class Convention { DT, PT };

// Boundary vertex carrying the doubled half-integer label in sector i (1..3).
Tri label_vertex(Convention conv, int N, int sector, int label2);

class HoneycombGraph {
 public:
  HoneycombGraph() = default;
  HoneycombGraph(int N, Convention conv);

  int N() const { return N_; }
  Convention convention() const { return conv_; }
  const std::vector<Tri>& all_vertices() const { return vertices_; }
  std::vector<Tri> vertices() const;  // present vertices
  int vertex_count() const;
  bool in_hexagon(const Tri& t) const;
  bool contains(const Tri& t) const;
  const std::vector<Tri>& removed() const { return removed_; }

  HoneycombGraph without(const std::vector<Tri>& gone) const;

  std::vector<HEdge> edges() const;

  // Weighted graph on the present vertices, with the index map.
  WeightedGraph weighted(std::vector<Tri>* index_to_tri = nullptr) const;

  bool on_outer_boundary(const Tri& t) const;

 private:
  int N_ = 0;
  Convention conv_ = Convention::DT;
  std::vector<Tri> vertices_;
  std::vector<Tri> removed_;
};

HoneycombGraph build_h(int N, Convention conv = Convention::DT);

// H(N; mu): delete the vertices labelled by S_i^+ and S_i^- in each sector (DT layout).
HoneycombGraph remove_for_maya(const HoneycombGraph& h, const Triple& mu);

QLaurent dimer_z(const HoneycombGraph& g);
QLaurent dimer_z_naive(const HoneycombGraph& g);
// Valuation of dimer_z; throws Unmatchable.
int minimal_matching_weight(const HoneycombGraph& g);

// Downward-closed region of Z^3 viewed as a stepped surface.
struct Surface {
  std::function<bool(const Cell&)> member;
  int reach = 0;  // every cell with all coordinates > reach lies outside
  Cell shift{};   // translation applied to the whole region
  bool contains(const Cell& w) const { return member(w - shift); }
};

// Top cell of the column over face f.
int surface_height(const Surface& s, Face f);

// The tiling of the plane by a surface, restricted to H(N).
struct Truncation {
  std::vector<HEdge> edges;  // both ends in H(N)
  std::vector<Tri> nodes;    // vertices of H(N) whose partner lies outside
  int weight = 0;            // sum of edge exponents
};

// Partner of triangle t in the tiling of s.
HEdge tiling_edge(const Surface& s, const Tri& t);
Truncation truncate_surface(const Surface& s, int N);

// DT surfaces: R_1 + cylinders + extra boxes.
Surface dt_surface(const Triple& mu, std::vector<Cell> extra = {});

// q^{-w~_min} Z^D(H(N; mu)), truncated to the degree-(N - M) window.
QLaurent dt_via_dimers(const Triple& mu, int N);

struct KuoNodes {
  Tri a, b, c, d;
};

// The four vertices of H(N; mu1^rc, mu2^rc, mu3) used to condense (mu1, mu2).
KuoNodes kuo_nodes(const Triple& mu, int N);

struct KuoResult {
  bool holds = false;
  QLaurent lhs, rhs;
};

// Z(G) Z(G-abcd) = Z(G-ab) Z(G-cd) + Z(G-ad) Z(G-bc); checks node admissibility.
KuoResult kuo_condensation_check(const HoneycombGraph& g, const Tri& a, const Tri& b, const Tri& c,
                                 const Tri& d);

// Boundary vertices of H(N) in counterclockwise order.
std::vector<Tri> boundary_cycle(int N);

// True if q[0..3] occur around the cycle in this order, in either orientation.
bool in_cyclic_order(const std::vector<Tri>& cycle, const std::array<Tri, 4>& q);

}  // namespace ptdt
