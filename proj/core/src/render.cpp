#include "ptdt/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ptdt {

namespace {

constexpr double kScale = 40.0;

struct Pt {
  double x, y;
};

Pt to_screen(double u, double v, int N) {
  const double x = u - 0.5 * v, y = v * std::sqrt(3.0) / 2.0;
  const double pad = N + 1.0;
  return {(x + pad) * kScale, (pad - y) * kScale};
}

Pt corner(const Face& f, int N) { return to_screen(f.u, f.v, N); }

Pt center(const Tri& t, int N) {
  double u = 0, v = 0;
  for (const Face& f : tri_corners(t)) {
    u += f.u;
    v += f.v;
  }
  return to_screen(u / 3.0, v / 3.0, N);
}

std::string header(int N) {
  const double side = 2.0 * (N + 1.0) * kScale;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
     << "\" viewBox=\"0 0 " << side << " " << side << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

const char* lozenge_fill(int type) {
  switch (type) {
    case 1: return "#d8b365";
    case 2: return "#5ab4ac";
    default: return "#f5f5f5";
  }
}

const char* node_fill(NodeColor c) {
  switch (c) {
    case NodeColor::Red: return "#d7191c";
    case NodeColor::Green: return "#1a9641";
    case NodeColor::Blue: return "#2b83ba";
  }
  return "black";
}

void line(std::ostringstream& os, Pt a, Pt b, const char* color, double width) {
  os << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y << "\" stroke=\""
     << color << "\" stroke-width=\"" << width << "\" stroke-linecap=\"round\"/>\n";
}

}  // namespace

std::string render_tiling_svg(int N, const std::vector<HEdge>& edges, const std::vector<Tri>& marked) {
  std::ostringstream os;
  os << header(N);
  for (const HEdge& e : edges) {
    // The lozenge is the union of the two triangles, walked around its boundary.
    const auto b = tri_corners(e.black);
    const auto w = tri_corners(e.white);
    Face only_b{}, only_w{};
    for (const Face& f : b)
      if (std::find(w.begin(), w.end(), f) == w.end()) only_b = f;
    for (const Face& f : w)
      if (std::find(b.begin(), b.end(), f) == b.end()) only_w = f;
    std::vector<Face> shared;
    for (const Face& f : b)
      if (std::find(w.begin(), w.end(), f) != w.end()) shared.push_back(f);
    const Face ring[4] = {only_b, shared[0], only_w, shared[1]};
    os << "<polygon points=\"";
    for (const Face& f : ring) {
      const Pt p = corner(f, N);
      os << p.x << "," << p.y << " ";
    }
    os << "\" fill=\"" << lozenge_fill(e.type) << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  }
  for (const Tri& t : marked) {
    const Pt p = center(t, N);
    os << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"5\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_dd_svg(const DoubleDimerConfig& d, const NodeSet& ns) {
  const int N = d.N;
  std::ostringstream os;
  os << header(N);
  for (const HEdge& e : build_h(N, Convention::PT).edges()) line(os, center(e.black, N), center(e.white, N), "#ddd", 1);
  for (const HEdge& e : d.ma.edges) {
    const bool doubled = std::find(d.mb.edges.begin(), d.mb.edges.end(), e) != d.mb.edges.end();
    line(os, center(e.black, N), center(e.white, N), doubled ? "#555" : "#e66101", doubled ? 5 : 3);
  }
  for (const HEdge& e : d.mb.edges)
    if (std::find(d.ma.edges.begin(), d.ma.edges.end(), e) == d.ma.edges.end())
      line(os, center(e.black, N), center(e.white, N), "#5e3c99", 3);
  for (const Node& n : ns.nodes) {
    const Pt p = center(n.vertex, N);
    os << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"6\" fill=\"" << node_fill(n.color)
       << "\" stroke=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

nlohmann::json graph_json(const HoneycombGraph& g) {
  std::vector<Tri> idx;
  const WeightedGraph w = g.weighted(&idx);
  nlohmann::json j;
  j["N"] = g.N();
  j["vertices"] = nlohmann::json::array();
  for (const Tri& t : idx) j["vertices"].push_back({{"kind", t.nabla ? "nabla" : "delta"}, {"u", t.u}, {"v", t.v}});
  j["edges"] = nlohmann::json::array();
  for (int a = 0; a < w.size(); ++a)
    for (const auto& arc : w.adj[static_cast<std::size_t>(a)])
      if (a < arc.to) j["edges"].push_back({{"a", a}, {"b", arc.to}, {"exponent", arc.exponent}});
  return j;
}

}  // namespace ptdt
