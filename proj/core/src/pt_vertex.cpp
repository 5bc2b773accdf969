#include "ptdt/pt_vertex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ptdt/errors.hpp"
#include "ptdt/parallel.hpp"

namespace ptdt {

namespace {

bool has(const std::vector<Cell>& s, const Cell& w) { return std::binary_search(s.begin(), s.end(), w); }

bool in_a_region(const RegionTag& t) { return t.region == Region::IMinus || t.region == Region::III; }
bool in_b_region(const RegionTag& t) { return t.region == Region::II || t.region == Region::III; }

bool closed_upward(const std::vector<Cell>& s, const Triple& mu, bool a_side) {
  for (const Cell& w : s) {
    const RegionTag t = classify(w, mu);
    if (a_side ? !in_a_region(t) : !in_b_region(t)) return false;
    for (const Cell& f : front_neighbors(w)) {
      const RegionTag tf = classify(f, mu);
      if ((a_side ? in_a_region(tf) : in_b_region(tf)) && !has(s, f)) return false;
    }
  }
  return true;
}

// Sector index a labelling-set cell forces on its component, or 0.
int forced_sector(const RegionTag& t) {
  if (t.region == Region::IMinus || t.region == Region::II) return t.index;
  return 0;
}

}  // namespace

ABConfig make_ab(std::vector<Cell> A, std::vector<Cell> B) {
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  std::sort(B.begin(), B.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());
  return ABConfig{std::move(A), std::move(B)};
}

bool is_ab_config(const ABConfig& c, const Triple& mu) {
  if (!std::is_sorted(c.A.begin(), c.A.end()) || !std::is_sorted(c.B.begin(), c.B.end())) return false;
  return closed_upward(c.A, mu, true) && closed_upward(c.B, mu, false);
}

std::vector<Cell> labelling_set(const ABConfig& c, const Triple& mu) {
  std::set<Cell> out;
  for (const Cell& w : c.A) {
    const Region r = classify(w, mu).region;
    if (r == Region::IMinus || (r == Region::III && !has(c.B, w))) out.insert(w);
  }
  for (const Cell& w : c.B)
    if (classify(w, mu).region == Region::III && !has(c.A, w)) out.insert(w);
  for (const Cell& w : region_cells(mu).II)
    if (!has(c.B, w)) out.insert(w);
  return {out.begin(), out.end()};
}

int ComponentLabelling::free_count() const {
  int n = 0;
  for (const auto& c : components) n += c.tag.free;
  return n;
}

std::optional<ComponentLabelling> ab_label(const ABConfig& c, const Triple& mu) {
  const std::vector<Cell> L = labelling_set(c, mu);
  std::vector<char> seen(L.size(), 0);
  ComponentLabelling out;
  int free_id = 0;
  for (std::size_t s = 0; s < L.size(); ++s) {
    if (seen[s]) continue;
    Component comp;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    std::set<int> sectors;
    while (!stack.empty()) {
      const Cell w = L[stack.back()];
      stack.pop_back();
      comp.cells.push_back(w);
      if (const int i = forced_sector(classify(w, mu))) sectors.insert(i);
      for (const Cell& f : face_neighbors(w)) {
        auto it = std::lower_bound(L.begin(), L.end(), f);
        if (it == L.end() || *it != f) continue;
        const auto j = static_cast<std::size_t>(it - L.begin());
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    if (sectors.size() > 1) return std::nullopt;
    std::sort(comp.cells.begin(), comp.cells.end());
    comp.tag = sectors.empty() ? Label{true, free_id++} : Label{false, *sectors.begin()};
    out.components.push_back(std::move(comp));
  }
  return out;
}

int LabelledBoxConfig::size() const {
  int n = 0;
  for (const auto& b : boxes) n += 1 + b.unlabelled;
  return n;
}

int LabelledBoxConfig::free_count() const {
  std::set<int> ids;
  for (const auto& b : boxes)
    if (b.label && b.label->free) ids.insert(b.label->index);
  return static_cast<int>(ids.size());
}

LabelledBoxConfig reconstruct_pi(const ABConfig& c, const Triple& mu) {
  const auto lab = ab_label(c, mu);
  if (!lab) throw LabelConflict("labelling fails: a component meets two sectors");
  std::map<Cell, Label> tag;
  for (const auto& comp : lab->components)
    for (const Cell& w : comp.cells) tag[w] = comp.tag;
  std::set<Cell> cells(c.A.begin(), c.A.end());
  cells.insert(c.B.begin(), c.B.end());
  LabelledBoxConfig pi;
  for (const Cell& w : cells) {
    LabelledBox b{w, classify(w, mu), false, std::nullopt};
    if (b.region.region == Region::III) {
      if (has(c.A, w) && has(c.B, w)) b.unlabelled = true;
      else b.label = tag.at(w);
    }
    pi.boxes.push_back(b);
  }
  return pi;
}

bool check_conditions1(const LabelledBoxConfig& pi, const Triple& mu) {
  std::map<Cell, const LabelledBox*> box;
  for (const auto& b : pi.boxes) {
    const RegionTag t = classify(b.cell, mu);
    if (t != b.region) return false;
    if (t.region != Region::IMinus && t.region != Region::II && t.region != Region::III) return false;
    if (t.region == Region::III) {
      if (b.unlabelled == b.label.has_value()) return false;
      if (b.label && !b.label->free && (b.label->index < 1 || b.label->index > 3)) return false;
    } else if (b.unlabelled || b.label) {
      return false;
    }
    box[b.cell] = &b;
  }
  std::set<Cell> check;
  for (const auto& b : pi.boxes)
    for (const Cell& f : front_neighbors(b.cell)) check.insert(f);
  for (const Cell& w : check) {
    const RegionTag t = classify(w, mu);
    auto it = box.find(w);
    const LabelledBox* self = it == box.end() ? nullptr : it->second;
    std::vector<const LabelledBox*> back;
    for (const Cell& b : back_neighbors(w))
      if (auto j = box.find(b); j != box.end()) back.push_back(j->second);
    if (back.empty()) continue;
    switch (t.region) {
      case Region::IMinus:
        if (!self) return false;
        break;
      case Region::II: {
        const Label ei{false, t.index};
        for (const LabelledBox* b : back)
          if (!(b->region.region == Region::III && b->label == ei) && !self) return false;
        break;
      }
      case Region::III: {
        // Lines spanned by back-neighbor boxes; two distinct lines or an unlabelled box span the plane.
        std::set<Label> lines;
        bool plane = false;
        for (const LabelledBox* b : back) {
          if (b->region.region == Region::IMinus) lines.insert(Label{false, b->region.index});
          else if (b->unlabelled) plane = true;
          else if (b->label) lines.insert(*b->label);
        }
        plane = plane || lines.size() > 1;
        if (!self) return false;
        if (plane && !self->unlabelled) return false;
        if (!plane && !lines.empty() && !self->unlabelled && self->label != *lines.begin()) return false;
        break;
      }
      default:
        break;
    }
  }
  return true;
}

ABConfig project_base(const ABConfig& c, const Triple& mu) {
  std::vector<Cell> A = c.A, B;
  for (const Cell& w : c.B) {
    if (classify(w, mu).region == Region::III && !has(c.A, w)) A.push_back(w);
    else B.push_back(w);
  }
  return make_ab(std::move(A), std::move(B));
}

BigInt chi_top(const LabelledBoxConfig& pi) { return BigInt(1) << pi.free_count(); }

std::vector<std::vector<std::vector<Cell>>> stacked_sets(const Triple& mu, bool a_side, int s_max) {
  const int M = constant_M(mu);
  auto in_region = [&](const Cell& w) {
    const RegionTag t = classify(w, mu);
    return a_side ? in_a_region(t) : in_b_region(t);
  };
  auto can_add = [&](const std::vector<Cell>& s, const Cell& w) {
    if (!in_region(w) || has(s, w)) return false;
    for (const Cell& f : front_neighbors(w))
      if (in_region(f) && !has(s, f)) return false;
    return true;
  };
  // Cells with no in-region front neighbor; these lie in [-1, M]^3.
  std::vector<Cell> seeds;
  for (int x = -1; x <= M; ++x)
    for (int y = -1; y <= M; ++y)
      for (int z = -1; z <= M; ++z)
        if (can_add({}, Cell{x, y, z})) seeds.push_back(Cell{x, y, z});

  std::vector<std::vector<std::vector<Cell>>> out{{{}}};
  for (int k = 1; k <= s_max; ++k) {
    std::set<std::vector<Cell>> next;
    for (const auto& s : out.back()) {
      std::set<Cell> cand(seeds.begin(), seeds.end());
      for (const Cell& w : s)
        for (const Cell& b : back_neighbors(w)) cand.insert(b);
      for (const Cell& w : cand) {
        if (!can_add(s, w)) continue;
        std::vector<Cell> t = s;
        t.insert(std::upper_bound(t.begin(), t.end(), w), w);
        next.insert(std::move(t));
      }
    }
    out.emplace_back(next.begin(), next.end());
  }
  return out;
}

std::vector<ABConfig> enumerate_ab_all(const Triple& mu, int s_max) {
  std::vector<ABConfig> out;
  if (s_max < 0) return out;
  const auto as = stacked_sets(mu, true, s_max);
  const auto bs = stacked_sets(mu, false, s_max);
  for (int s = 0; s <= s_max; ++s) {
    std::vector<ABConfig> layer;
    for (int a = 0; a <= s; ++a)
      for (const auto& A : as[static_cast<std::size_t>(a)])
        for (const auto& B : bs[static_cast<std::size_t>(s - a)]) layer.push_back(ABConfig{A, B});
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<ABConfig> enumerate_ab(const Triple& mu, int s_max) {
  const std::vector<ABConfig> all = enumerate_ab_all(mu, s_max);
  std::vector<char> ok(all.size(), 0);
  parallel_for(all.size(), [&](std::size_t i) { ok[i] = ab_label(all[i], mu).has_value(); });
  std::vector<ABConfig> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (ok[i]) out.push_back(all[i]);
  return out;
}

QLaurent pt_vertex(const Triple& mu, int T) {
  const RegionStats st = region_stats(mu);
  const int val = -st.II - 2 * st.III;
  const int s_max = T - val;
  std::vector<BigInt> counts(static_cast<std::size_t>(std::max(s_max + 1, 0)));
  for (const ABConfig& c : enumerate_ab(mu, s_max)) counts[static_cast<std::size_t>(c.size())] += 1;
  return QLaurent::from_coeffs(val, std::move(counts), T);
}

}  // namespace ptdt
