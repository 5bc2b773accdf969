#include "ptdt/matching.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "ptdt/errors.hpp"

namespace ptdt {

namespace {

__extension__ typedef unsigned __int128 Mask;

struct MaskHash {
  std::size_t operator()(const Mask& m) const noexcept {
    const auto lo = static_cast<std::uint64_t>(m);
    const auto hi = static_cast<std::uint64_t>(m >> 64);
    return std::hash<std::uint64_t>()(lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL));
  }
};

Count add_checked(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("dimer count exceeds 128 bits");
  return r;
}

// Polynomial with nonnegative exponent offset lo.
struct Poly {
  int lo = 0;
  std::vector<Count> c;

  void add(const Poly& src, int shift) {
    if (src.c.empty()) return;
    const int slo = src.lo + shift;
    if (c.empty()) {
      lo = slo;
      c = src.c;
      return;
    }
    const int shi = slo + static_cast<int>(src.c.size()) - 1;
    const int hi = std::max(lo + static_cast<int>(c.size()) - 1, shi);
    if (slo < lo) {
      c.insert(c.begin(), static_cast<std::size_t>(lo - slo), 0);
      lo = slo;
    }
    c.resize(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < src.c.size(); ++i) {
      auto& dst = c[static_cast<std::size_t>(slo - lo) + i];
      dst = add_checked(dst, src.c[i]);
    }
  }
};

QLaurent to_qlaurent(const Poly& p) {
  std::map<int, BigInt> terms;
  for (std::size_t i = 0; i < p.c.size(); ++i)
    if (p.c[i] != 0) terms[p.lo + static_cast<int>(i)] = to_bigint(p.c[i]);
  return QLaurent::polynomial(terms);
}

struct Order {
  std::vector<int> order;
  std::vector<int> rank;
  int band = 0;
};

Order make_order(const WeightedGraph& g) {
  Order o;
  o.order = sweep_order(g);
  o.rank.assign(static_cast<std::size_t>(g.size()), 0);
  for (int i = 0; i < g.size(); ++i) o.rank[static_cast<std::size_t>(o.order[static_cast<std::size_t>(i)])] = i;
  for (int v = 0; v < g.size(); ++v)
    for (const auto& a : g.adj[static_cast<std::size_t>(v)])
      o.band = std::max(o.band, std::abs(o.rank[static_cast<std::size_t>(v)] - o.rank[static_cast<std::size_t>(a.to)]));
  return o;
}

}  // namespace

BigInt to_bigint(Count c) {
  BigInt hi = static_cast<std::uint64_t>(c >> 64);
  BigInt lo = static_cast<std::uint64_t>(c);
  return (hi << 64) | lo;
}

void WeightedGraph::add_edge(int a, int b, int exponent) {
  adj[static_cast<std::size_t>(a)].push_back({b, exponent});
  adj[static_cast<std::size_t>(b)].push_back({a, exponent});
}

std::vector<int> sweep_order(const WeightedGraph& g) {
  std::vector<int> best;
  int best_band = -1;
  for (int k = 0; k < 6; ++k) {
    const double th = k * M_PI / 6.0;
    const double cx = std::cos(th), cy = std::sin(th);
    std::vector<int> ord(static_cast<std::size_t>(g.size()));
    std::iota(ord.begin(), ord.end(), 0);
    auto key = [&](int v) {
      const double a = g.px[static_cast<std::size_t>(v)] * cx + g.py[static_cast<std::size_t>(v)] * cy;
      const double b = -g.px[static_cast<std::size_t>(v)] * cy + g.py[static_cast<std::size_t>(v)] * cx;
      return std::make_pair(std::round(a * 1e6), std::round(b * 1e6));
    };
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return key(a) < key(b); });
    std::vector<int> rank(ord.size());
    for (std::size_t i = 0; i < ord.size(); ++i) rank[static_cast<std::size_t>(ord[i])] = static_cast<int>(i);
    int band = 0;
    for (int v = 0; v < g.size(); ++v)
      for (const auto& a : g.adj[static_cast<std::size_t>(v)])
        band = std::max(band, std::abs(rank[static_cast<std::size_t>(v)] - rank[static_cast<std::size_t>(a.to)]));
    if (best_band < 0 || band < best_band) {
      best_band = band;
      best = ord;
    }
  }
  return best;
}

QLaurent dimer_polynomial(const WeightedGraph& g) {
  const int n = g.size();
  if (n == 0) return QLaurent::one();
  const Order o = make_order(g);
  if (o.band >= 127) throw std::length_error("sweep band too wide for the transfer DP");
  std::unordered_map<Mask, Poly, MaskHash> states;
  states[0] = Poly{0, {1}};
  for (int cur = 0; cur < n; ++cur) {
    const int v = o.order[static_cast<std::size_t>(cur)];
    std::unordered_map<Mask, Poly, MaskHash> next;
    for (const auto& [mask, poly] : states) {
      if (mask & 1) {
        next[mask >> 1].add(poly, 0);
        continue;
      }
      for (const auto& a : g.adj[static_cast<std::size_t>(v)]) {
        const int j = o.rank[static_cast<std::size_t>(a.to)] - cur;
        if (j <= 0 || ((mask >> j) & 1)) continue;
        next[(mask | (Mask(1) << j)) >> 1].add(poly, a.exponent);
      }
    }
    states = std::move(next);
  }
  auto it = states.find(0);
  if (it == states.end()) return QLaurent::exact_zero();
  return to_qlaurent(it->second);
}

std::optional<int> dimer_min_weight(const WeightedGraph& g) {
  const int n = g.size();
  if (n == 0) return 0;
  const Order o = make_order(g);
  if (o.band >= 127) throw std::length_error("sweep band too wide for the transfer DP");
  std::unordered_map<Mask, int, MaskHash> states;
  states[0] = 0;
  auto relax = [](std::unordered_map<Mask, int, MaskHash>& m, Mask k, int w) {
    auto [it, fresh] = m.emplace(k, w);
    if (!fresh) it->second = std::min(it->second, w);
  };
  for (int cur = 0; cur < n; ++cur) {
    const int v = o.order[static_cast<std::size_t>(cur)];
    std::unordered_map<Mask, int, MaskHash> next;
    for (const auto& [mask, w] : states) {
      if (mask & 1) {
        relax(next, mask >> 1, w);
        continue;
      }
      for (const auto& a : g.adj[static_cast<std::size_t>(v)]) {
        const int j = o.rank[static_cast<std::size_t>(a.to)] - cur;
        if (j <= 0 || ((mask >> j) & 1)) continue;
        relax(next, (mask | (Mask(1) << j)) >> 1, w + a.exponent);
      }
    }
    states = std::move(next);
  }
  auto it = states.find(0);
  if (it == states.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<int>> all_matchings(const WeightedGraph& g, const std::vector<char>& removed) {
  const int n = g.size();
  std::vector<std::vector<int>> out;
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  std::function<void()> rec = [&]() {
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!removed[static_cast<std::size_t>(i)] && partner[static_cast<std::size_t>(i)] < 0) {
        v = i;
        break;
      }
    if (v < 0) {
      out.push_back(partner);
      return;
    }
    for (const auto& a : g.adj[static_cast<std::size_t>(v)]) {
      if (removed[static_cast<std::size_t>(a.to)] || partner[static_cast<std::size_t>(a.to)] >= 0) continue;
      partner[static_cast<std::size_t>(v)] = a.to;
      partner[static_cast<std::size_t>(a.to)] = v;
      rec();
      partner[static_cast<std::size_t>(v)] = -1;
      partner[static_cast<std::size_t>(a.to)] = -1;
    }
  };
  rec();
  return out;
}

namespace {

int matching_weight(const WeightedGraph& g, const std::vector<int>& m) {
  int w = 0;
  for (int v = 0; v < g.size(); ++v) {
    const int u = m[static_cast<std::size_t>(v)];
    if (u < 0 || u < v) continue;
    for (const auto& a : g.adj[static_cast<std::size_t>(v)])
      if (a.to == u) {
        w += a.exponent;
        break;
      }
  }
  return w;
}

}  // namespace

QLaurent dimer_polynomial_naive(const WeightedGraph& g) {
  std::map<int, BigInt> terms;
  for (const auto& m : all_matchings(g, std::vector<char>(static_cast<std::size_t>(g.size()), 0)))
    terms[matching_weight(g, m)] += 1;
  return QLaurent::polynomial(terms);
}

DoubleDimerDecomposition decompose_double_dimer(const std::vector<int>& m1, const std::vector<int>& m2) {
  DoubleDimerDecomposition d;
  const int n = static_cast<int>(m1.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  auto deg = [&](int v) { return (m1[static_cast<std::size_t>(v)] >= 0) + (m2[static_cast<std::size_t>(v)] >= 0); };
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)] || deg(s) != 1) continue;
    std::vector<int> path{s};
    seen[static_cast<std::size_t>(s)] = 1;
    int v = s;
    bool use_first = m1[static_cast<std::size_t>(s)] >= 0;
    while (true) {
      const int w = use_first ? m1[static_cast<std::size_t>(v)] : m2[static_cast<std::size_t>(v)];
      if (w < 0) {
        d.valid = false;
        break;
      }
      path.push_back(w);
      seen[static_cast<std::size_t>(w)] = 1;
      v = w;
      if (deg(v) == 1) break;
      use_first = !use_first;
    }
    d.paths.emplace_back(std::min(s, v), std::max(s, v));
    d.path_vertices.push_back(std::move(path));
  }
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    if (deg(s) == 0) continue;
    if (deg(s) == 1) {
      d.valid = false;
      continue;
    }
    if (m1[static_cast<std::size_t>(s)] == m2[static_cast<std::size_t>(s)]) {
      seen[static_cast<std::size_t>(s)] = 1;
      seen[static_cast<std::size_t>(m1[static_cast<std::size_t>(s)])] = 1;
      ++d.doubled;
      continue;
    }
    int v = s;
    bool use_first = true;
    do {
      seen[static_cast<std::size_t>(v)] = 1;
      v = use_first ? m1[static_cast<std::size_t>(v)] : m2[static_cast<std::size_t>(v)];
      use_first = !use_first;
    } while (v != s);
    ++d.loops;
  }
  std::sort(d.paths.begin(), d.paths.end());
  return d;
}

namespace {

NodePairing canonical(NodePairing p) {
  for (auto& [a, b] : p)
    if (a > b) std::swap(a, b);
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

QLaurent double_dimer_polynomial_naive(const WeightedGraph& g, const std::vector<int>& nodes,
                                       const NodePairing& pairing) {
  const int n = g.size();
  const NodePairing want = canonical(pairing);
  const std::size_t k = nodes.size();
  std::map<int, BigInt> terms;
  // Every split of the node set into the parts missed by M1 and by M2; each
  // configuration appears 2^{#paths} 2^{#loops} times.
  for (std::size_t bits = 0; bits < (std::size_t(1) << k); ++bits) {
    std::vector<char> r1(static_cast<std::size_t>(n), 0), r2(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if ((bits >> i) & 1) r1[static_cast<std::size_t>(nodes[i])] = 1;
      else r2[static_cast<std::size_t>(nodes[i])] = 1;
    }
    const auto ms1 = all_matchings(g, r1);
    if (ms1.empty()) continue;
    const auto ms2 = all_matchings(g, r2);
    for (const auto& m1 : ms1)
      for (const auto& m2 : ms2) {
        const auto d = decompose_double_dimer(m1, m2);
        if (!d.valid || d.paths != want) continue;
        terms[matching_weight(g, m1) + matching_weight(g, m2)] += 1;
      }
  }
  const BigInt div = BigInt(1) << (k / 2);
  for (auto& [e, c] : terms) {
    if (c % div != 0) throw std::logic_error("double-dimer multiplicity not divisible by 2^{paths}");
    c /= div;
  }
  return QLaurent::polynomial(terms);
}

namespace {

// Transfer state of the double-dimer sweep. For each not-yet-processed vertex that
// already received edges: which matchings reached it and, per received edge, the
// other end of the strand (another open end, or a node).
struct Slot {
  int rank;
  int bits;
  int partner[2];
};

constexpr int kNodeFlag = 0x4000;

std::string encode(const std::vector<Slot>& slots, int base) {
  std::string key;
  key.reserve(slots.size() * 8);
  auto put = [&](int v) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  };
  for (const auto& s : slots) {
    put(s.rank - base);
    put(s.bits);
    for (int m = 0; m < 2; ++m) {
      if (!((s.bits >> m) & 1)) continue;
      const int p = s.partner[m];
      put(p < 0 ? (kNodeFlag | (-p - 1)) : (p - 2 * base));
    }
  }
  return key;
}

std::vector<Slot> decode(const std::string& key, int base) {
  std::vector<Slot> slots;
  std::size_t i = 0;
  auto get = [&]() {
    const int v = static_cast<unsigned char>(key[i]) | (static_cast<unsigned char>(key[i + 1]) << 8);
    i += 2;
    return v;
  };
  while (i < key.size()) {
    Slot s{};
    s.rank = get() + base;
    s.bits = get();
    for (int m = 0; m < 2; ++m) {
      if (!((s.bits >> m) & 1)) continue;
      const int p = get();
      s.partner[m] = (p & kNodeFlag) ? -((p & ~kNodeFlag) + 1) : p + 2 * base;
    }
    slots.push_back(s);
  }
  return slots;
}

}  // namespace

QLaurent double_dimer_polynomial(const WeightedGraph& g, const std::vector<int>& nodes,
                                 const NodePairing& pairing) {
  const int n = g.size();
  std::vector<int> nid(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) nid[static_cast<std::size_t>(nodes[k])] = static_cast<int>(k);
  std::vector<int> mate(nodes.size(), -1);
  for (auto [a, b] : pairing) {
    const int ka = nid[static_cast<std::size_t>(a)], kb = nid[static_cast<std::size_t>(b)];
    if (ka < 0 || kb < 0 || ka == kb || mate[static_cast<std::size_t>(ka)] >= 0 || mate[static_cast<std::size_t>(kb)] >= 0)
      throw BadNodeChoice("pairing does not match the node set");
    mate[static_cast<std::size_t>(ka)] = kb;
    mate[static_cast<std::size_t>(kb)] = ka;
  }
  for (int m : mate)
    if (m < 0) throw BadNodeChoice("pairing leaves a node unpaired");

  // Node x < y of a pair is missed by M1; y is missed by M1 too iff the path has odd length.
  std::vector<int> req(static_cast<std::size_t>(n), 3);
  for (auto [a, b] : pairing) {
    const int x = std::min(a, b), y = std::max(a, b);
    req[static_cast<std::size_t>(x)] = 2;
    req[static_cast<std::size_t>(y)] = g.color[static_cast<std::size_t>(x)] != g.color[static_cast<std::size_t>(y)] ? 2 : 1;
  }
  for (int bit = 0; bit < 2; ++bit) {
    int balance = 0;
    for (int v = 0; v < n; ++v)
      if ((req[static_cast<std::size_t>(v)] >> bit) & 1) balance += g.color[static_cast<std::size_t>(v)] ? 1 : -1;
    if (balance != 0) return QLaurent::exact_zero();
  }
  if (n == 0) return QLaurent::one();

  const Order o = make_order(g);
  std::unordered_map<std::string, Poly> states;
  states[std::string()] = Poly{0, {1}};

  for (int cur = 0; cur < n; ++cur) {
    const int v = o.order[static_cast<std::size_t>(cur)];
    const int need = req[static_cast<std::size_t>(v)];
    const int node = nid[static_cast<std::size_t>(v)];
    std::unordered_map<std::string, Poly> next;
    for (const auto& [key, poly] : states) {
      std::vector<Slot> slots = decode(key, cur);
      Slot here{cur, 0, {0, 0}};
      if (!slots.empty() && slots.front().rank == cur) {
        here = slots.front();
        slots.erase(slots.begin());
      }
      const int missing = need & ~here.bits;
      // Candidate targets per missing matching.
      std::vector<std::pair<int, int>> choice[2];  // (rank, exponent)
      for (int m = 0; m < 2; ++m) {
        if (!((missing >> m) & 1)) continue;
        for (const auto& a : g.adj[static_cast<std::size_t>(v)]) {
          const int r = o.rank[static_cast<std::size_t>(a.to)];
          if (r <= cur || !((req[static_cast<std::size_t>(a.to)] >> m) & 1)) continue;
          bool taken = false;
          for (const auto& s : slots)
            if (s.rank == r && ((s.bits >> m) & 1)) taken = true;
          if (!taken) choice[m].push_back({r, a.exponent});
        }
        if (choice[m].empty()) goto next_state;
      }
      {
        const std::vector<std::pair<int, int>> none{{-1, 0}};
        const auto& c0 = ((missing >> 0) & 1) ? choice[0] : none;
        const auto& c1 = ((missing >> 1) & 1) ? choice[1] : none;
        for (const auto& t0 : c0)
          for (const auto& t1 : c1) {
            std::vector<Slot> ns = slots;
            auto slot_of = [&](int r) -> Slot& {
              for (auto& s : ns)
                if (s.rank == r) return s;
              ns.push_back(Slot{r, 0, {0, 0}});
              return ns.back();
            };
            auto set_partner = [&](int end, int value) {
              Slot& s = slot_of(end / 2);
              s.partner[end % 2] = value;
            };
            const std::pair<int, int> target[2] = {t0, t1};
            int far[2] = {0, 0};
            for (int m = 0; m < 2; ++m) {
              if (!((need >> m) & 1)) continue;
              if ((here.bits >> m) & 1) {
                far[m] = here.partner[m];
              } else {
                Slot& s = slot_of(target[m].first);
                s.bits |= 1 << m;
                far[m] = target[m].first * 2 + m;
              }
            }
            bool ok = true;
            if (node < 0) {
              const bool loop = (here.bits == 3) && here.partner[0] == cur * 2 + 1;
              if (!loop) {
                const int x = far[0], y = far[1];
                if (x >= 0) set_partner(x, y);
                if (y >= 0) set_partner(y, x);
                if (x < 0 && y < 0 && mate[static_cast<std::size_t>(-x - 1)] != -y - 1) ok = false;
              }
            } else {
              const int m = need == 1 ? 0 : 1;
              const int p = far[m];
              if ((here.bits >> m) & 1) {
                if (p < 0) {
                  if (mate[static_cast<std::size_t>(node)] != -p - 1) ok = false;
                } else {
                  set_partner(p, -(node + 1));
                }
              } else {
                set_partner(p, -(node + 1));
              }
            }
            if (!ok) continue;
            std::sort(ns.begin(), ns.end(), [](const Slot& a, const Slot& b) { return a.rank < b.rank; });
            next[encode(ns, cur + 1)].add(poly, t0.second + t1.second);
          }
      }
    next_state:;
    }
    states = std::move(next);
  }
  auto it = states.find(std::string());
  if (it == states.end()) return QLaurent::exact_zero();
  return to_qlaurent(it->second);
}

}  // namespace ptdt
