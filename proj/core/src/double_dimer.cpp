#include "ptdt/double_dimer.hpp"

#include <algorithm>
#include <set>

#include "ptdt/errors.hpp"

namespace ptdt {

namespace {

struct Indexed {
  WeightedGraph g;
  std::vector<Tri> tri;
  std::map<Tri, int> index;
};

Indexed indexed(const HoneycombGraph& h) {
  Indexed out;
  out.g = h.weighted(&out.tri);
  for (std::size_t i = 0; i < out.tri.size(); ++i) out.index[out.tri[i]] = static_cast<int>(i);
  return out;
}

std::vector<int> partners(const Indexed& ix, const std::vector<HEdge>& edges) {
  std::vector<int> m(ix.tri.size(), -1);
  for (const HEdge& e : edges) {
    const int b = ix.index.at(e.black), w = ix.index.at(e.white);
    m[static_cast<std::size_t>(b)] = w;
    m[static_cast<std::size_t>(w)] = b;
  }
  return m;
}

bool has(const std::vector<Cell>& s, const Cell& w) { return std::binary_search(s.begin(), s.end(), w); }

}  // namespace

const char* color_name(NodeColor c) {
  switch (c) {
    case NodeColor::Red: return "red";
    case NodeColor::Green: return "green";
    case NodeColor::Blue: return "blue";
  }
  return "?";
}

NodeColor node_color(int sector, bool plus) {
  switch (sector) {
    case 1: return plus ? NodeColor::Blue : NodeColor::Red;
    case 2: return plus ? NodeColor::Red : NodeColor::Green;
    case 3: return plus ? NodeColor::Green : NodeColor::Blue;
    default: throw std::invalid_argument("sector must be 1, 2 or 3");
  }
}

std::vector<Tri> NodeSet::vertices() const {
  std::vector<Tri> out;
  for (const Node& n : nodes) out.push_back(n.vertex);
  return out;
}

int NodeSet::count(NodeColor c) const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [c](const Node& n) { return n.color == c; }));
}

NodeSet make_node_set(int N, std::vector<Node> nodes) {
  const std::vector<Tri> cycle = boundary_cycle(N);
  auto pos = [&](const Tri& t) {
    auto it = std::find(cycle.begin(), cycle.end(), t);
    if (it == cycle.end()) throw BadNodeChoice("nodes must lie on the boundary of H(N)");
    return it - cycle.begin();
  };
  std::sort(nodes.begin(), nodes.end(), [&](const Node& x, const Node& y) { return pos(x.vertex) < pos(y.vertex); });
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (nodes[i].vertex == nodes[i - 1].vertex) throw BadNodeChoice("repeated node");
  return NodeSet{N, std::move(nodes)};
}

NodeSet node_set(int N, const Triple& mu) {
  std::vector<Node> nodes;
  for (int i = 1; i <= 3; ++i) {
    const MayaDiagram s = maya(mu[static_cast<std::size_t>(i - 1)]);
    for (int t = 1; t <= N; ++t) {
      const int l = 2 * t - 1;
      if (!std::count(s.beads_positive.begin(), s.beads_positive.end(), l))
        nodes.push_back(Node{label_vertex(Convention::PT, N, i, l), i, l, node_color(i, true)});
      if (!std::count(s.holes_negative.begin(), s.holes_negative.end(), -l))
        nodes.push_back(Node{label_vertex(Convention::PT, N, i, -l), i, -l, node_color(i, false)});
    }
  }
  return make_node_set(N, std::move(nodes));
}

NodeSet without_nodes(const NodeSet& ns, const std::vector<Tri>& gone) {
  NodeSet out{ns.N, {}};
  for (const Node& n : ns.nodes)
    if (std::find(gone.begin(), gone.end(), n.vertex) == gone.end()) out.nodes.push_back(n);
  return out;
}

Pairing canonical_pairing(Pairing p) {
  for (auto& [x, y] : p)
    if (y < x) std::swap(x, y);
  std::sort(p.begin(), p.end());
  return p;
}

Pairing rainbow_pairing(const NodeSet& ns) {
  Pairing out;
  for (int i = 1; i <= 3; ++i) {
    std::vector<const Node*> plus, minus;
    for (const Node& n : ns.nodes)
      if (n.sector == i) (n.label2 > 0 ? plus : minus).push_back(&n);
    if (plus.size() != minus.size()) throw OddSector("sector " + std::to_string(i) + " has unequal node signs");
    auto by_distance = [](const Node* x, const Node* y) { return std::abs(x->label2) < std::abs(y->label2); };
    std::sort(plus.begin(), plus.end(), by_distance);
    std::sort(minus.begin(), minus.end(), by_distance);
    for (std::size_t j = 0; j < plus.size(); ++j) out.emplace_back(plus[j]->vertex, minus[j]->vertex);
  }
  return canonical_pairing(out);
}

Pairing tripartite_pairing(const NodeSet& ns) {
  const std::size_t n = ns.nodes.size();
  if (n == 0) return {};
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (ns.nodes[i].color != ns.nodes[(i + n - 1) % n].color) {
      start = i;
      break;
    }
  if (start == n) throw BadNodeChoice("all nodes share one color");
  std::vector<std::vector<Tri>> blocks;
  std::vector<NodeColor> block_color;
  for (std::size_t k = 0; k < n; ++k) {
    const Node& nd = ns.nodes[(start + k) % n];
    if (blocks.empty() || block_color.back() != nd.color) {
      blocks.emplace_back();
      block_color.push_back(nd.color);
    }
    blocks.back().push_back(nd.vertex);
  }
  if (blocks.size() > 3) throw BadNodeChoice("node colors are not circularly contiguous");
  while (blocks.size() < 3) blocks.emplace_back();
  const int x = static_cast<int>(blocks[0].size()), y = static_cast<int>(blocks[1].size()),
            z = static_cast<int>(blocks[2].size());
  if ((x + y + z) % 2 != 0 || x > y + z || y > x + z || z > x + y)
    throw BadNodeChoice("node color counts violate the triangle inequality");
  const std::array<int, 3> sizes{x, y, z};
  const std::array<int, 3> across{(x + y - z) / 2, (y + z - x) / 2, (z + x - y) / 2};
  Pairing out;
  for (int k = 0; k < 3; ++k) {
    const auto& p = blocks[static_cast<std::size_t>(k)];
    const auto& q = blocks[static_cast<std::size_t>((k + 1) % 3)];
    for (int j = 0; j < across[static_cast<std::size_t>(k)]; ++j)
      out.emplace_back(p[static_cast<std::size_t>(sizes[static_cast<std::size_t>(k)] - 1 - j)],
                       q[static_cast<std::size_t>(j)]);
  }
  return canonical_pairing(out);
}

QLaurent dd_z(const HoneycombGraph& g, const NodeSet& ns, const Pairing& sigma) {
  const Indexed ix = indexed(g);
  std::vector<int> nodes;
  for (const Node& n : ns.nodes) {
    auto it = ix.index.find(n.vertex);
    if (it == ix.index.end()) throw BadNodeChoice("node is not a vertex of the graph");
    nodes.push_back(it->second);
  }
  NodePairing p;
  for (const auto& [x, y] : sigma) {
    const int i = ix.index.at(x), j = ix.index.at(y);
    p.emplace_back(std::min(i, j), std::max(i, j));
  }
  return double_dimer_polynomial(ix.g, nodes, p);
}

Surface a_surface(const ABConfig& c, const Triple& mu, Cell shift) {
  Surface s;
  s.reach = std::max(constant_M(mu), 0);
  s.shift = shift;
  s.member = [mu, A = c.A](const Cell& w) {
    if (in_R2(w)) return true;
    const Region r = classify(w, mu).region;
    return (r == Region::IMinus || r == Region::III) && !has(A, w);
  };
  return s;
}

Surface b_surface(const ABConfig& c, const Triple& mu, Cell shift) {
  Surface s;
  s.reach = std::max(constant_M(mu), 0);
  s.shift = shift;
  s.member = [mu, B = c.B](const Cell& w) {
    if (in_R1(w)) return true;
    const Region r = classify(w, mu).region;
    return (r == Region::II || r == Region::III) && !has(B, w);
  };
  return s;
}

DoubleDimerConfig ab_to_dd(const ABConfig& c, const Triple& mu, int N, Cell shift) {
  for (const auto* s : {&c.A, &c.B})
    for (const Cell& w : *s)
      if (hex_radius(face_of(w + shift)) > N - 1) throw BoxOutOfWindow("box column lies outside H(N)");
  DoubleDimerConfig d;
  d.N = N;
  d.ma = truncate_surface(a_surface(c, mu, shift), N);
  d.mb = truncate_surface(b_surface(c, mu, shift), N);
  d.weight = d.ma.weight + d.mb.weight;
  std::vector<Tri> na = d.ma.nodes, nb = d.mb.nodes;
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(d.nodes));
  const Indexed ix = indexed(build_h(N, Convention::PT));
  const DoubleDimerDecomposition dec = decompose_double_dimer(partners(ix, d.ma.edges), partners(ix, d.mb.edges));
  d.loops = dec.loops;
  d.doubled = dec.doubled;
  for (const auto& [x, y] : dec.paths) d.pairing.emplace_back(ix.tri[static_cast<std::size_t>(x)], ix.tri[static_cast<std::size_t>(y)]);
  d.pairing = canonical_pairing(d.pairing);
  for (const auto& p : dec.path_vertices) {
    std::vector<Tri> path;
    for (int v : p) path.push_back(ix.tri[static_cast<std::size_t>(v)]);
    d.paths.push_back(std::move(path));
  }
  return d;
}

Pairing path_pairing(const DoubleDimerConfig& d) { return d.pairing; }

bool rainbow_check(const ABConfig& c, const Triple& mu, int N) {
  const DoubleDimerConfig d = ab_to_dd(c, mu, N);
  const NodeSet ns = node_set(N, mu);
  std::vector<Tri> expect = ns.vertices();
  std::sort(expect.begin(), expect.end());
  if (d.nodes != expect) return false;
  return path_pairing(d) == rainbow_pairing(ns);
}

std::map<Face, int> relative_height(const ABConfig& c, const Triple& mu, int N) {
  const Surface sa = a_surface(c, mu), sb = b_surface(c, mu);
  for (const auto* s : {&c.A, &c.B})
    for (const Cell& w : *s)
      if (hex_radius(face_of(w)) > N - 1) throw BoxOutOfWindow("box column lies outside the window");
  const int M = constant_M(mu);
  const Face base{-M, -M};
  const int offset = surface_height(sb, base) - surface_height(sa, base);
  std::map<Face, int> h;
  for (int u = -N; u <= N; ++u)
    for (int v = -N; v <= N; ++v) {
      const Face f{u, v};
      if (hex_radius(f) <= N) h[f] = surface_height(sb, f) - surface_height(sa, f) - offset;
    }
  return h;
}

int face_sector(Face f) {
  if (f.u < std::min(f.v, 0)) return 1;
  if (f.v < std::min(f.u, 0)) return 2;
  if (0 < std::min(f.u, f.v)) return 3;
  return 0;
}

int FaceLabelling::free_count() const {
  int n = 0;
  for (const auto& c : components) n += c.tag.free;
  return n;
}

std::optional<FaceLabelling> dd_label(const ABConfig& c, const Triple& mu, int N) {
  const std::map<Face, int> h = relative_height(c, mu, N);
  std::set<Face> seen;
  FaceLabelling out;
  int free_id = 0;
  for (const auto& [f0, v0] : h) {
    if (v0 == 0 || seen.count(f0)) continue;
    FaceComponent comp;
    std::set<int> sectors;
    bool reaches_edge = false;
    std::vector<Face> stack{f0};
    seen.insert(f0);
    while (!stack.empty()) {
      const Face f = stack.back();
      stack.pop_back();
      comp.faces.push_back(f);
      if (hex_radius(f) == N) {
        reaches_edge = true;
        if (const int s = face_sector(f)) sectors.insert(s);
      }
      for (const Face& g : face_neighbors(f)) {
        auto it = h.find(g);
        if (it == h.end() || it->second == 0 || seen.count(g)) continue;
        seen.insert(g);
        stack.push_back(g);
      }
    }
    if (sectors.size() > 1) return std::nullopt;
    if (reaches_edge && sectors.empty()) return std::nullopt;
    std::sort(comp.faces.begin(), comp.faces.end());
    comp.tag = reaches_edge ? Label{false, *sectors.begin()} : Label{true, free_id++};
    out.components.push_back(std::move(comp));
  }
  return out;
}

bool labellings_agree(const ComponentLabelling& cells, const FaceLabelling& faces) {
  if (cells.free_count() != faces.free_count()) return false;
  std::map<Face, const FaceComponent*> where;
  for (const auto& fc : faces.components)
    for (const Face& f : fc.faces) where[f] = &fc;
  std::set<const FaceComponent*> free_hit;
  for (const auto& cc : cells.components) {
    const FaceComponent* target = nullptr;
    for (const Cell& w : cc.cells) {
      auto it = where.find(face_of(w));
      if (it == where.end()) return false;
      if (target && target != it->second) return false;
      target = it->second;
    }
    if (!target || target->tag.free != cc.tag.free) return false;
    if (!cc.tag.free && target->tag.index != cc.tag.index) return false;
    if (cc.tag.free && !free_hit.insert(target).second) return false;
  }
  return true;
}

int base_weight(const Triple& mu, int N, Cell shift) {
  const RegionCells rc = region_cells(mu);
  std::vector<Cell> B = rc.II;
  B.insert(B.end(), rc.III.begin(), rc.III.end());
  const ABConfig base = make_ab(rc.III, B);
  const Truncation ta = truncate_surface(a_surface(base, mu, shift), N);
  const Truncation tb = truncate_surface(b_surface(base, mu, shift), N);
  return ta.weight + tb.weight;
}

QLaurent pt_via_dd(const Triple& mu, int N) {
  if (N < std::max(constant_M(mu), 1)) throw LabelOutOfRange("pt_via_dd needs N >= M");
  const NodeSet ns = node_set(N, mu);
  const QLaurent z = dd_z(build_h(N, Convention::PT), ns, rainbow_pairing(ns));
  return scale_monomial(z, -base_weight(mu, N));
}

QLaurent pt_window_via_dd(const Triple& mu, int N) {
  const RegionStats st = region_stats(mu);
  return qs_invert_variable(pt_via_dd(mu, N)).truncated(-st.II - 2 * st.III + (N - st.M));
}

DDNodes dd_condensation_nodes(const Triple& mu, int N) {
  if (mu[0].empty() || mu[1].empty()) throw EmptyPartition("dd_condensation_nodes");
  const MayaDiagram s1 = maya(mu[0]), s2 = maya(mu[1]);
  return DDNodes{label_vertex(Convention::PT, N, 1, s1.holes_negative.front()),
                 label_vertex(Convention::PT, N, 1, s1.beads_positive.front()),
                 label_vertex(Convention::PT, N, 2, s2.holes_negative.front()),
                 label_vertex(Convention::PT, N, 2, s2.beads_positive.front())};
}

DDCondensationResult dd_condensation_check(const HoneycombGraph& g, const NodeSet& ns, const Tri& a,
                                           const Tri& b, const Tri& c, const Tri& d) {
  const std::vector<Tri> vs = ns.vertices();
  std::set<NodeColor> colors;
  for (const Tri& t : {a, b, c, d}) {
    auto it = std::find(vs.begin(), vs.end(), t);
    if (it == vs.end()) throw BadNodeChoice("condensation vertices must be nodes");
    colors.insert(ns.nodes[static_cast<std::size_t>(it - vs.begin())].color);
  }
  if (std::set<Tri>{a, b, c, d}.size() != 4) throw BadNodeChoice("condensation vertices must be distinct");
  if (a.nabla != c.nabla || b.nabla != d.nabla || a.nabla == b.nabla)
    throw BadNodeChoice("need a, c in one color class of the graph and b, d in the other");
  if (colors.size() != 3) throw BadNodeChoice("a, b, c, d must carry all three node colors");
  if (!in_cyclic_order(boundary_cycle(ns.N), {a, b, c, d})) throw BadNodeChoice("nodes are not in cyclic order");
  auto z = [&](const std::vector<Tri>& gone) {
    const NodeSet sub = without_nodes(ns, gone);
    return dd_z(g, sub, tripartite_pairing(sub));
  };
  DDCondensationResult r;
  r.lhs = z({}) * z({a, b, c, d});
  r.rhs = z({a, b}) * z({c, d}) + z({a, d}) * z({b, c});
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace ptdt
