#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ptdt/honeycomb.hpp"
#include "ptdt/pt_vertex.hpp"

namespace ptdt {

enum class NodeColor { Red, Green, Blue };

const char* color_name(NodeColor c);

// Sector 1: + blue, - red. Sector 2: + red, - green. Sector 3: + green, - blue.
NodeColor node_color(int sector, bool plus);

struct Node {
  Tri vertex;
  int sector = 0;  // 0 for nodes not attached to a sector label
  int label2 = 0;  // doubled half-integer label
  NodeColor color = NodeColor::Red;
};

struct NodeSet {
  int N = 0;
  std::vector<Node> nodes;  // counterclockwise boundary order
  std::vector<Tri> vertices() const;
  int count(NodeColor c) const;
};

// Sorts nodes into counterclockwise order on the boundary of H(N).
NodeSet make_node_set(int N, std::vector<Node> nodes);

// N_mu(N): PT boundary labels |t| <= N not in S_i^+ or S_i^-.
NodeSet node_set(int N, const Triple& mu);

NodeSet without_nodes(const NodeSet& ns, const std::vector<Tri>& gone);

// Pairs with first < second, sorted.
using Pairing = std::vector<std::pair<Tri, Tri>>;
Pairing canonical_pairing(Pairing p);

// Nested pairing inside each sector; throws OddSector if a sector has unequal signs.
Pairing rainbow_pairing(const NodeSet& ns);

// The planar pairing with no two nodes of one color paired; colors must occupy
// circularly contiguous arcs and satisfy the triangle inequality (BadNodeChoice otherwise).
Pairing tripartite_pairing(const NodeSet& ns);

// Double-dimer sum on g with nodes ns and paths realising sigma.
QLaurent dd_z(const HoneycombGraph& g, const NodeSet& ns, const Pairing& sigma);

// Superposition of the truncated tilings of the two surfaces built from (A, B).
struct DoubleDimerConfig {
  int N = 0;
  Truncation ma;            // partial matching; its unmatched vertices are the nodes
  Truncation mb;            // perfect matching
  std::vector<Tri> nodes;   // sorted
  int weight = 0;           // sum of edge exponents of both matchings
  int loops = 0;
  int doubled = 0;
  Pairing pairing;          // node pairing traced by the paths
  std::vector<std::vector<Tri>> paths;
};

Surface a_surface(const ABConfig& c, const Triple& mu, Cell shift = {});
Surface b_surface(const ABConfig& c, const Triple& mu, Cell shift = {});

// Throws BoxOutOfWindow if a box's column misses the interior faces of H(N).
DoubleDimerConfig ab_to_dd(const ABConfig& c, const Triple& mu, int N, Cell shift = {});

Pairing path_pairing(const DoubleDimerConfig& d);

bool rainbow_check(const ABConfig& c, const Triple& mu, int N);

// h_B - h_A on the faces of radius <= N, zero at the face of the cell (0, 0, M).
std::map<Face, int> relative_height(const ABConfig& c, const Triple& mu, int N);

// Sector of a face: argmin of (u, v, 0); 0 on the dividing rays.
int face_sector(Face f);

struct FaceComponent {
  std::vector<Face> faces;  // sorted
  Label tag;
};

struct FaceLabelling {
  std::vector<FaceComponent> components;
  int free_count() const;
};

// Components of {h != 0} in the radius-N window: those reaching the window edge take the
// sector they reach, the rest are free. nullopt if a component reaches two sectors.
std::optional<FaceLabelling> dd_label(const ABConfig& c, const Triple& mu, int N);

// Every cell component maps into one face component with the same tag kind, and free counts agree.
bool labellings_agree(const ComponentLabelling& cells, const FaceLabelling& faces);

// Edge weight of the base configuration (III, II + III), read off the truncated tilings.
int base_weight(const Triple& mu, int N, Cell shift = {});

// q^{-w_base} Z^DD_rainbow(H(N), N_mu(N)) as an exact polynomial.
QLaurent pt_via_dd(const Triple& mu, int N);

// The W series read off pt_via_dd: exponents inverted, known through -|II|-2|III|+(N-M).
QLaurent pt_window_via_dd(const Triple& mu, int N);

struct DDNodes {
  Tri a, b, c, d;
};

// Sector-1 labels max S^-(mu1), min S^+(mu1); sector-2 labels max S^-(mu2), min S^+(mu2).
DDNodes dd_condensation_nodes(const Triple& mu, int N);

struct DDCondensationResult {
  bool holds = false;
  QLaurent lhs, rhs;
};

// Z_s Z_{s,abcd} = Z_{s,ab} Z_{s,cd} + Z_{s,ad} Z_{s,bc}, each with the tripartite pairing of its nodes.
DDCondensationResult dd_condensation_check(const HoneycombGraph& g, const NodeSet& ns, const Tri& a,
                                           const Tri& b, const Tri& c, const Tri& d);

}  // namespace ptdt
