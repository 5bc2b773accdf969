#include "ptdt/honeycomb.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ptdt/errors.hpp"

namespace ptdt {

namespace {

struct Planar {
  double x, y;
};

Planar planar(double u, double v) { return {u - 0.5 * v, v * std::sqrt(3.0) / 2.0}; }

Planar centroid(const Tri& t) {
  double su = 0, sv = 0;
  for (const Face& f : tri_corners(t)) {
    su += f.u;
    sv += f.v;
  }
  return planar(su / 3.0, sv / 3.0);
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Tri& t) {
  return os << (t.nabla ? "V" : "D") << "(" << t.u << "," << t.v << ")";
}

int hex_radius(Face f) { return std::max({std::abs(f.u), std::abs(f.v), std::abs(f.u - f.v)}); }

std::array<Face, 3> tri_corners(const Tri& t) {
  if (!t.nabla) return {Face{t.u, t.v}, Face{t.u + 1, t.v}, Face{t.u + 1, t.v + 1}};
  return {Face{t.u, t.v}, Face{t.u, t.v + 1}, Face{t.u + 1, t.v + 1}};
}

std::array<Face, 6> face_neighbors(const Face& f) {
  return {Face{f.u + 1, f.v}, Face{f.u - 1, f.v}, Face{f.u, f.v + 1},
          Face{f.u, f.v - 1}, Face{f.u + 1, f.v + 1}, Face{f.u - 1, f.v - 1}};
}

std::array<HEdge, 3> incident_edges(const Tri& t) {
  if (!t.nabla)
    return {HEdge{t, nabla(t.u, t.v - 1), 1}, HEdge{t, nabla(t.u + 1, t.v), 2}, HEdge{t, nabla(t.u, t.v), 3}};
  return {HEdge{delta(t.u, t.v + 1), t, 1}, HEdge{delta(t.u - 1, t.v), t, 2}, HEdge{delta(t.u, t.v), t, 3}};
}

Tri other_end(const HEdge& e, const Tri& t) { return t == e.black ? e.white : e.black; }

int edge_exponent(int N, const HEdge& e) { return e.type == 3 ? N - (e.black.v + 1) : 0; }

Tri label_vertex(Convention conv, int N, int sector, int label2) {
  const int t = (std::abs(label2) + 1) / 2;
  const bool plus = label2 > 0;
  if (t < 1 || t > N) throw LabelOutOfRange("label " + std::to_string(label2) + "/2 outside H(" + std::to_string(N) + ")");
  if (conv == Convention::DT) {
    switch (sector) {
      case 1: return plus ? delta(N - 1, t - 1) : nabla(N - t, -t);
      case 2: return plus ? delta(-t, N - t) : nabla(t - 1, N - 1);
      case 3: return plus ? delta(-N + t - 1, -N) : nabla(-N, -N + t - 1);
      default: break;
    }
  } else {
    switch (sector) {
      case 1: return plus ? delta(-N + t - 1, t - 1) : nabla(-N, -t);
      case 2: return plus ? delta(-t, -N) : nabla(t - 1, -N + t - 1);
      case 3: return plus ? delta(N - 1, N - t) : nabla(N - t, N - 1);
      default: break;
    }
  }
  throw std::invalid_argument("sector must be 1, 2 or 3");
}

HoneycombGraph::HoneycombGraph(int N, Convention conv) : N_(N), conv_(conv) {
  for (int u = -N - 1; u <= N + 1; ++u)
    for (int v = -N - 1; v <= N + 1; ++v)
      for (bool nb : {false, true}) {
        const Tri t{nb, u, v};
        if (in_hexagon(t)) vertices_.push_back(t);
      }
}

bool HoneycombGraph::in_hexagon(const Tri& t) const {
  for (const Face& f : tri_corners(t))
    if (hex_radius(f) > N_) return false;
  return true;
}

bool HoneycombGraph::contains(const Tri& t) const {
  return in_hexagon(t) && std::find(removed_.begin(), removed_.end(), t) == removed_.end();
}

std::vector<Tri> HoneycombGraph::vertices() const {
  std::vector<Tri> out;
  for (const Tri& t : vertices_)
    if (std::find(removed_.begin(), removed_.end(), t) == removed_.end()) out.push_back(t);
  return out;
}

int HoneycombGraph::vertex_count() const { return static_cast<int>(vertices().size()); }

HoneycombGraph HoneycombGraph::without(const std::vector<Tri>& gone) const {
  HoneycombGraph g = *this;
  for (const Tri& t : gone)
    if (g.contains(t)) g.removed_.push_back(t);
  std::sort(g.removed_.begin(), g.removed_.end());
  return g;
}

std::vector<HEdge> HoneycombGraph::edges() const {
  std::vector<HEdge> out;
  for (const Tri& t : vertices())
    if (!t.nabla)
      for (const HEdge& e : incident_edges(t))
        if (contains(e.white)) out.push_back(e);
  return out;
}

WeightedGraph HoneycombGraph::weighted(std::vector<Tri>* index_to_tri) const {
  const std::vector<Tri> vs = vertices();
  std::map<Tri, int> index;
  WeightedGraph g;
  g.adj.resize(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    index[vs[i]] = static_cast<int>(i);
    g.color.push_back(vs[i].nabla ? 1 : 0);
    const Planar p = centroid(vs[i]);
    g.px.push_back(p.x);
    g.py.push_back(p.y);
  }
  for (const HEdge& e : edges()) g.add_edge(index.at(e.black), index.at(e.white), edge_exponent(N_, e));
  if (index_to_tri) *index_to_tri = vs;
  return g;
}

bool HoneycombGraph::on_outer_boundary(const Tri& t) const {
  if (!in_hexagon(t)) return false;
  int deg = 0;
  for (const HEdge& e : incident_edges(t)) deg += in_hexagon(other_end(e, t));
  return deg < 3;
}

HoneycombGraph build_h(int N, Convention conv) {
  if (N < 1) throw std::invalid_argument("H(N) needs N >= 1");
  return HoneycombGraph(N, conv);
}

HoneycombGraph remove_for_maya(const HoneycombGraph& h, const Triple& mu) {
  std::vector<Tri> gone;
  for (int i = 1; i <= 3; ++i) {
    const MayaDiagram s = maya(mu[static_cast<std::size_t>(i - 1)]);
    for (int l : s.beads_positive) gone.push_back(label_vertex(h.convention(), h.N(), i, l));
    for (int l : s.holes_negative) gone.push_back(label_vertex(h.convention(), h.N(), i, l));
  }
  return h.without(gone);
}

QLaurent dimer_z(const HoneycombGraph& g) { return dimer_polynomial(g.weighted()); }

QLaurent dimer_z_naive(const HoneycombGraph& g) { return dimer_polynomial_naive(g.weighted()); }

int minimal_matching_weight(const HoneycombGraph& g) {
  const auto w = dimer_min_weight(g.weighted());
  if (!w) throw Unmatchable("graph has no perfect matching");
  return *w;
}

int surface_height(const Surface& s, Face f) {
  const int pad = std::max({std::abs(s.shift.x), std::abs(s.shift.y), std::abs(s.shift.z)});
  int t = s.reach + std::max(std::abs(f.u), std::abs(f.v)) + pad + 2;
  const int floor = -t - 4 * (s.reach + pad + 8);
  while (s.contains(Cell{f.u + t, f.v + t, t})) ++t;
  while (!s.contains(Cell{f.u + t, f.v + t, t})) {
    if (--t < floor) throw std::logic_error("surface column has no top cell");
  }
  return t;
}

namespace {

template <class H>
HEdge edge_from_heights(const H& h, const Tri& t) {
  if (!t.nabla) {
    const int h0 = h(Face{t.u, t.v}), h1 = h(Face{t.u + 1, t.v}), h2 = h(Face{t.u + 1, t.v + 1});
    const auto es = incident_edges(t);
    if (h0 - h1 == 1) return es[0];
    if (h1 - h2 == 1) return es[1];
    if (h0 != h2) throw std::logic_error("height function is not a lozenge tiling");
    return es[2];
  }
  for (const HEdge& e : incident_edges(t)) {
    const HEdge back = edge_from_heights(h, e.black);
    if (back == e) return e;
  }
  throw std::logic_error("white triangle left uncovered by the tiling");
}

}  // namespace

HEdge tiling_edge(const Surface& s, const Tri& t) {
  return edge_from_heights([&](Face f) { return surface_height(s, f); }, t);
}

Truncation truncate_surface(const Surface& s, int N) {
  std::map<Face, int> cache;
  auto h = [&](Face f) {
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    const int v = surface_height(s, f);
    cache.emplace(f, v);
    return v;
  };
  const HoneycombGraph hex(N, Convention::PT);
  Truncation out;
  for (const Tri& t : hex.all_vertices()) {
    const HEdge e = edge_from_heights(h, t);
    const Tri p = other_end(e, t);
    if (!hex.in_hexagon(p)) {
      out.nodes.push_back(t);
    } else if (!t.nabla) {
      out.edges.push_back(e);
      out.weight += edge_exponent(N, e);
    }
  }
  return out;
}

Surface dt_surface(const Triple& mu, std::vector<Cell> extra) {
  std::sort(extra.begin(), extra.end());
  int reach = constant_M(mu);
  for (const Cell& c : extra) reach = std::max({reach, c.x + 1, c.y + 1, c.z + 1});
  Surface s;
  s.reach = reach;
  s.member = [mu, extra](const Cell& w) {
    if (in_R1(w)) return true;
    for (int i = 1; i <= 3; ++i)
      if (in_cylinder(w, i, mu[static_cast<std::size_t>(i - 1)])) return true;
    return std::binary_search(extra.begin(), extra.end(), w);
  };
  return s;
}

QLaurent dt_via_dimers(const Triple& mu, int N) {
  const RegionStats st = region_stats(mu);
  if (N < std::max(st.M, 1)) throw LabelOutOfRange("dt_via_dimers needs N >= M");
  const QLaurent z = dimer_z(remove_for_maya(build_h(N, Convention::DT), mu));
  if (z.is_zero()) throw Unmatchable("H(N; mu) has no perfect matching");
  const int shift = -z.valuation() - st.II - 2 * st.III;
  const QLaurent scaled = scale_monomial(z, shift);
  return QLaurent::from_coeffs(scaled.valuation(), scaled.coeffs(), -st.II - 2 * st.III + (N - st.M));
}

KuoNodes kuo_nodes(const Triple& mu, int N) {
  if (mu[0].empty() || mu[1].empty()) throw EmptyPartition("kuo_nodes");
  const MayaDiagram s1 = maya(mu[0]), s2 = maya(mu[1]);
  KuoNodes k;
  k.a = label_vertex(Convention::DT, N, 1, s1.holes_negative.front());
  k.b = label_vertex(Convention::DT, N, 1, s1.beads_positive.front());
  k.c = label_vertex(Convention::DT, N, 2, s2.holes_negative.front());
  k.d = label_vertex(Convention::DT, N, 2, s2.beads_positive.front());
  return k;
}

std::vector<Tri> boundary_cycle(int N) {
  const HoneycombGraph h(N, Convention::DT);
  std::vector<Tri> out;
  for (const Tri& t : h.all_vertices())
    if (h.on_outer_boundary(t)) out.push_back(t);
  std::sort(out.begin(), out.end(), [](const Tri& a, const Tri& b) {
    const Planar pa = centroid(a), pb = centroid(b);
    return std::atan2(pa.y, pa.x) < std::atan2(pb.y, pb.x);
  });
  return out;
}

bool in_cyclic_order(const std::vector<Tri>& cycle, const std::array<Tri, 4>& q) {
  std::array<int, 4> pos{};
  for (int i = 0; i < 4; ++i) {
    auto it = std::find(cycle.begin(), cycle.end(), q[static_cast<std::size_t>(i)]);
    if (it == cycle.end()) return false;
    pos[static_cast<std::size_t>(i)] = static_cast<int>(it - cycle.begin());
  }
  auto increasing_cyclic = [&](std::array<int, 4> p) {
    int descents = 0;
    for (int i = 0; i < 4; ++i) descents += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>((i + 1) % 4)];
    return descents == 1;
  };
  std::array<int, 4> rev{pos[3], pos[2], pos[1], pos[0]};
  return increasing_cyclic(pos) || increasing_cyclic(rev);
}

KuoResult kuo_condensation_check(const HoneycombGraph& g, const Tri& a, const Tri& b, const Tri& c,
                                 const Tri& d) {
  for (const Tri& t : {a, b, c, d})
    if (!g.contains(t) || !g.on_outer_boundary(t)) throw BadNodeChoice("condensation nodes must lie on the outer face");
  if (!a.nabla || !c.nabla || b.nabla || d.nabla) throw BadNodeChoice("need a, c white and b, d black");
  if (!in_cyclic_order(boundary_cycle(g.N()), {a, b, c, d})) throw BadNodeChoice("nodes are not in cyclic order");
  KuoResult r;
  r.lhs = dimer_z(g) * dimer_z(g.without({a, b, c, d}));
  r.rhs = dimer_z(g.without({a, b})) * dimer_z(g.without({c, d})) + dimer_z(g.without({a, d})) * dimer_z(g.without({b, c}));
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace ptdt
