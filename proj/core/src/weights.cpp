#include "ptdt/weights.hpp"

#include <stdexcept>

#include "ptdt/box_geometry.hpp"
#include "ptdt/double_dimer.hpp"
#include "ptdt/dt_vertex.hpp"
#include "ptdt/errors.hpp"
#include "ptdt/honeycomb.hpp"
#include "ptdt/pt_vertex.hpp"

namespace ptdt {

namespace {

using i64 = std::int64_t;

// Accumulates doubled values.
struct Sum {
  Trace* trace;
  i64 twice = 0;
  void add(const char* name, i64 doubled) {
    twice += doubled;
    if (trace) trace->add(name, doubled);
  }
  i64 value() const {
    if (twice % 2 != 0) throw std::logic_error("closed form is not an integer");
    return twice / 2;
  }
};

i64 g(const Partition& p, int i) { return p(i); }
i64 len(const Partition& p) { return p.length(); }
i64 sz(const Partition& p) { return p.size(); }

i64 mu3_term(const Partition& m3, i64 N, i64 c) {
  i64 s = 0;
  for (int i = 1; i <= m3.length(); ++i) s += (c * N + i) * g(m3, i);
  return s;
}

void require_nonempty(const Triple& mu, const char* op) {
  if (mu[0].empty() || mu[1].empty()) throw EmptyPartition(op);
}

}  // namespace

i64 w_min_closed(const Triple& mu, int N_, Trace* trace) {
  const i64 N = N_;
  const Partition& m1 = mu[0];
  const Partition& m2 = mu[1];
  const Partition& m3 = mu[2];
  const Partition c1 = conjugate(m1);
  Sum s{trace};
  s.add("N^2(N-1)/2", N * N * (N - 1));
  s.add("N(|mu1|+|mu2|+|mu3|)", 2 * N * (sz(m1) + sz(m2) + sz(m3)));
  s.add("mu3", 2 * mu3_term(m3, N, -2));
  i64 t = 0;
  for (int i = 1; i <= c1.length(); ++i) {
    const i64 x = g(c1, i);
    t += (1 <= i && i <= x) ? (i - 1) * (N + x - i) : x * (N + x - i);
  }
  s.add("mu1'", 2 * t);
  t = 0;
  for (int i = 1; i <= m2.length(); ++i) {
    const i64 x = g(m2, i);
    t += (1 <= i && i <= x) ? (i - 1) * (2 * x - i) : (x - 1) * x;
  }
  s.add("mu2", t);
  return s.value();
}

std::pair<i64, i64> w_updown_closed(const Triple& mu, int N_, Trace* trace) {
  require_nonempty(mu, "w_updown_closed");
  const i64 N = N_;
  const Partition& m3 = mu[2];
  i64 up, down;
  {
    const Partition r = mu_r(mu[0]), c = mu_c(mu[1]), rc = conjugate(r);
    Sum s{trace};
    s.add("u:N(N^2+2N-1)/2", N * (N * N + 2 * N - 1));
    s.add("u:(N+1)(|mu1^r|+|mu2^c|)+N", 2 * ((N + 1) * (sz(r) + sz(c)) + N));
    s.add("u:mu3", 2 * ((N - 1) * sz(m3) + mu3_term(m3, N, -2)));
    i64 t = 0;
    for (int i = 1; i <= rc.length() + 1; ++i) {
      const i64 x = g(rc, i);
      if (1 <= i && i <= x + 1) t += (i - 2) * (N + x - (i - 1));
      else if (i <= rc.length()) t += x * (N + x - (i - 1));
    }
    s.add("u:(mu1^r)'", 2 * t);
    t = 0;
    for (int i = 1; i <= c.length(); ++i) {
      const i64 x = g(c, i);
      t += (1 <= i && i <= x + 1) ? (i - 2) * (2 * x - (i - 1)) : x * (x - 1);
    }
    s.add("u:mu2^c", t);
    up = s.value();
  }
  {
    const Partition c = mu_c(mu[0]), r = mu_r(mu[1]), cc = conjugate(c);
    Sum s{trace};
    s.add("d:(N-1)^2(N-2)/2", (N - 1) * (N - 1) * (N - 2));
    s.add("d:(N-1)(|mu1^c|+|mu2^r|)", 2 * (N - 1) * (sz(c) + sz(r)));
    s.add("d:mu3", 2 * ((N + 1) * sz(m3) + mu3_term(m3, N, -2)));
    i64 t = 0;
    for (int i = 1; i <= cc.length(); ++i) {
      const i64 x = g(cc, i);
      t += (1 <= i && i <= x) ? i * (N + x - i - 1) : x * (N + x - i - 1);
    }
    s.add("d:(mu1^c)'", 2 * t);
    t = 0;
    for (int i = 1; i <= r.length(); ++i) {
      const i64 x = g(r, i);
      t += (1 <= i && i <= x) ? i * (2 * x - (i + 1)) : x * (x - 1);
    }
    s.add("d:mu2^r", t);
    down = s.value();
  }
  return {up, down};
}

i64 w_base_closed(const Triple& mu, int N_, Trace* trace) {
  const i64 N = N_;
  const Partition c = conjugate(mu[0]);
  const Partition& m2 = mu[1];
  const i64 L1 = len(c), L2 = len(m2);
  Sum s{trace};
  s.add("N^2(N-1)/2", N * N * (N - 1));
  i64 t = 0;
  for (i64 i = 1; i < N - L1; ++i) t += (N - L1 - 1) * (N - L1) - (i - 1) * i;
  s.add("empty rows of mu1'", t);
  t = 0;
  for (int i = 1; i <= L1; ++i) {
    const i64 x = g(c, i);
    t += (x >= i && i >= 1) ? (N - x) * (N + x - i) : (N - i) * (N + x - i);
  }
  s.add("mu1'", 2 * t);
  t = 0;
  for (i64 i = 1; i < N - L2; ++i) t += (N + i - 1) * (N - i - L2);
  s.add("empty rows of mu2", 2 * t);
  t = 0;
  for (int i = 1; i <= L2; ++i) {
    const i64 x = g(m2, i);
    t += (x >= i && i >= 1) ? 2 * (x + N) * (N - x) + (N - x - 1) * (N - x)
                            : 2 * (N - i) * (x + N) + (N - i - 1) * (N - i);
  }
  s.add("mu2", t);
  t = 0;
  for (int i = 1; i <= mu[2].length(); ++i) t += (N - i) * g(mu[2], i);
  s.add("mu3", 2 * t);
  return s.value();
}

i64 w_up_closed(const Triple& mu, int N_, Trace* trace) {
  require_nonempty(mu, "w_up_closed");
  const i64 N = N_;
  const Partition r = mu_r(mu[0]), c = mu_c(mu[1]), rc = conjugate(r);
  const i64 L1 = len(rc), L2 = len(c);
  Sum s{trace};
  s.add("(N+1)N(N-1)/2+N^2", (N + 1) * N * (N - 1) + 2 * N * N);
  i64 t = 0;
  for (i64 i = 1; i < N - L1; ++i) t += (N - L1 + 1) * (N - L1) - i * (i + 1);
  s.add("empty rows of (mu1^r)'", t);
  t = 0;
  for (int i = 1; i <= L1 + 1; ++i) {
    const i64 x = g(rc, i);
    if (!rc.empty() && x >= i - 1 && i - 1 >= 0) t += (N - x - 1) * (x + N - i + 1);
    if (x < i - 1 && i - 1 <= L1 - 1) t += (N - i) * (x + N - i + 1);
  }
  s.add("(mu1^r)'", 2 * t);
  t = 0;
  for (i64 i = 1; i < N - L2; ++i) t += (N + i) * (N - i - L2);
  s.add("empty rows of mu2^c", 2 * t);
  t = 0;
  for (int i = 1; i <= L2 + 1; ++i) {
    const i64 x = g(c, i);
    if (!c.empty() && x >= i - 1 && i - 1 >= 0) t += 2 * (x + N) * (N - x - 1) + (N - x - 1) * (N - x);
    if (x < i - 1 && i - 1 <= L2 - 1) t += 2 * (N - i) * (x + N) + (N - i + 1) * (N - i);
  }
  s.add("mu2^c", t);
  i64 u = 0;
  for (int i = 1; i <= mu[2].length(); ++i) u += (N + 1 - i) * g(mu[2], i);
  s.add("mu3", 2 * u);
  return s.value();
}

i64 w_down_closed(const Triple& mu, int N_, Trace* trace) {
  require_nonempty(mu, "w_down_closed");
  const i64 N = N_;
  const Partition c1 = mu_c(mu[0]), r = mu_r(mu[1]), cc = conjugate(c1);
  const i64 L1 = len(cc), L2 = len(r);
  Sum s{trace};
  s.add("(N-1)^2(N-2)/2", (N - 1) * (N - 1) * (N - 2) + (N - L1 - 2) * (N - L1 - 1));
  i64 t = 0;
  for (i64 i = 1; i < N - L1 - 1; ++i) t += (N - L1 - 1) * (N - L1 - 2) - (i - 1) * i;
  s.add("empty rows of (mu1^c)'", t);
  t = 0;
  for (int i = 1; i <= L1 + 1; ++i) {
    const i64 x = g(cc, i);
    if (x > i + 1 && i + 1 > 1) t += (N - x + 1) * (x + N - i - 1);
    else if (x <= i + 1 && i + 1 <= L1 + 1) t += (N - i) * (x + N - i - 1);
  }
  s.add("(mu1^c)'", 2 * t);
  t = 0;
  for (i64 i = 1; i < N - L2; ++i) t += (N + i - 2) * (N - i - L2);
  s.add("empty rows of mu2^r", 2 * t);
  t = 0;
  for (int i = 1; i <= L2 + 1; ++i) {
    const i64 x = g(r, i);
    if (x > i + 1 && i + 1 > 1) t += 2 * (x + N - 1) * (N - x + 1) + (N - x + 1) * (N - x);
    else if (x <= i + 1 && i + 1 <= L2 + 1) t += 2 * (N - i) * (x + N - 1) + (N - i - 1) * (N - i);
  }
  s.add("mu2^r", t);
  i64 u = 0;
  for (int i = 1; i <= mu[2].length(); ++i) u += (N - 1 - i) * g(mu[2], i);
  s.add("mu3", 2 * u);
  return s.value();
}

BruteWeights brute_weights(const Triple& mu, int N) {
  BruteWeights b;
  const RegionStats st = region_stats(mu);
  b.w_tilde_min = minimal_matching_weight(remove_for_maya(build_h(N), mu)) + st.II + 2 * st.III;
  b.w_base = base_weight(mu, N);
  if (mu[0].empty() || mu[1].empty() || N <= st.M) return b;
  b.has_updown = true;
  const Triple rc{mu_rc(mu[0]), mu_rc(mu[1]), mu[2]};
  const Triple up{mu_r(mu[0]), mu_c(mu[1]), mu[2]};
  const Triple down{mu_c(mu[0]), mu_r(mu[1]), mu[2]};
  const KuoNodes k = kuo_nodes(mu, N);
  const HoneycombGraph g = remove_for_maya(build_h(N), rc);
  const RegionStats su = region_stats(up), sd = region_stats(down);
  b.w_tilde_u = minimal_matching_weight(g.without({k.a, k.d})) + su.II + 2 * su.III;
  b.w_tilde_d = minimal_matching_weight(g.without({k.b, k.c})) + sd.II + 2 * sd.III;
  b.w_up = base_weight(up, N, unit(2));
  b.w_down = base_weight(down, N, Cell{0, 0, -1});
  return b;
}

WeightReport weight_report(const Triple& mu, int N) {
  WeightReport w;
  w.N = N;
  const RegionStats st = region_stats(mu);
  w.w_tilde_min = w_min_closed(mu, N);
  w.w_min = w.w_tilde_min - st.II - 2 * st.III;
  w.w_base = w_base_closed(mu, N);
  if (mu[0].empty() || mu[1].empty()) return w;
  w.has_updown = true;
  const Partition r1 = mu_rc(mu[0]), r2 = mu_rc(mu[1]);
  const Triple rcrc{r1, r2, mu[2]}, rc_1{r1, mu[1], mu[2]}, rc_2{mu[0], r2, mu[2]};
  std::tie(w.w_tilde_u, w.w_tilde_d) = w_updown_closed(mu, N);
  w.w_up = w_up_closed(mu, N);
  w.w_down = w_down_closed(mu, N);
  w.K = constant_K(mu[0], mu[1]);
  w.A_dt = w.w_tilde_min + w_min_closed(rcrc, N);
  w.B_dt = w_min_closed(rc_1, N) + w_min_closed(rc_2, N);
  w.C_dt = w.w_tilde_u + w.w_tilde_d;
  w.A_pt = w.w_base + w_base_closed(rcrc, N);
  w.B_pt = w_base_closed(rc_2, N) + w_base_closed(rc_1, N);
  w.C_pt = w.w_up + w.w_down;
  return w;
}

bool verify_ca_identity(Side side, const Triple& mu, int N) {
  require_nonempty(mu, "verify_ca_identity");
  if (N <= constant_M(mu)) throw LabelOutOfRange("the up/down weights need N >= M+1");
  std::vector<i64> diffs;
  for (int n = N; n <= N + 2; ++n) {
    const WeightReport w = weight_report(mu, n);
    const i64 A = side == Side::DT ? w.A_dt : w.A_pt;
    const i64 B = side == Side::DT ? w.B_dt : w.B_pt;
    const i64 C = side == Side::DT ? w.C_dt : w.C_pt;
    if (A != B) return false;
    diffs.push_back(C - A);
  }
  const i64 K = constant_K(mu[0], mu[1]);
  for (i64 d : diffs)
    if (d != (side == Side::DT ? -K : K)) return false;
  return true;
}

CondensationResult verify_condensation(VertexKind kind, const Triple& mu, int depth) {
  require_nonempty(mu, "verify_condensation");
  const Partition& m1 = mu[0];
  const Partition& m2 = mu[1];
  const Partition& m3 = mu[2];
  auto X = [&](const Partition& a, const Partition& b) {
    const Triple t{a, b, m3};
    const RegionStats st = region_stats(t);
    const int T = -st.II - 2 * st.III + depth;
    return kind == VertexKind::VoverM ? dt_vertex(t, T) : pt_vertex(t, T);
  };
  const int K = constant_K(m1, m2);
  const Partition rc1 = mu_rc(m1), rc2 = mu_rc(m2);
  CondensationResult r;
  r.lhs = scale_monomial(X(m1, m2) * X(rc1, rc2), K);
  r.rhs = scale_monomial(X(rc1, m2) * X(m1, rc2), K) + X(mu_r(m1), mu_c(m2)) * X(mu_c(m1), mu_r(m2));
  r.lo = std::min(r.lhs.valuation(), r.rhs.valuation());
  r.hi = std::min(r.lhs.trunc(), r.rhs.trunc());
  r.holds = r.hi >= r.lo && qs_eq_to_order(r.lhs, r.rhs, r.lo, r.hi);
  return r;
}

PtdtResult verify_ptdt(const Triple& mu, int T) {
  const RegionStats st = region_stats(mu);
  const int val = -st.II - 2 * st.III;
  PtdtResult r;
  r.dt = dt_vertex(mu, T);
  r.product = macmahon(std::max(T - val, 0)) * pt_vertex(mu, T);
  r.lo = val;
  r.hi = T;
  r.holds = qs_eq_to_order(r.dt, r.product, r.lo, r.hi);
  return r;
}

}  // namespace ptdt
