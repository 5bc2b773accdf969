#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ptdt/partition.hpp"
#include "ptdt/qlaurent.hpp"

namespace ptdt {

// Named summands of a closed form, each stored doubled (halves stay integral).
struct Trace {
  std::vector<std::pair<std::string, std::int64_t>> terms;
  void add(const std::string& name, std::int64_t doubled) { terms.emplace_back(name, doubled); }
};

// w~_min(mu) = w_min + |II| + 2|III| for H(N; mu).
std::int64_t w_min_closed(const Triple& mu, int N, Trace* trace = nullptr);
// (w~^u, w~^d): minimal weights of H(N; mu1^rc, mu2^rc, mu3) - {a,d} and - {b,c}, renormalised
// by the region counts of (mu1^r, mu2^c, mu3) and (mu1^c, mu2^r, mu3).
std::pair<std::int64_t, std::int64_t> w_updown_closed(const Triple& mu, int N, Trace* trace = nullptr);

std::int64_t w_base_closed(const Triple& mu, int N, Trace* trace = nullptr);
std::int64_t w_up_closed(const Triple& mu, int N, Trace* trace = nullptr);
std::int64_t w_down_closed(const Triple& mu, int N, Trace* trace = nullptr);

// The same quantities read off the graphs; the up/down values need N >= M+1.
struct BruteWeights {
  std::int64_t w_tilde_min = 0, w_tilde_u = 0, w_tilde_d = 0;
  std::int64_t w_base = 0, w_up = 0, w_down = 0;
  bool has_updown = false;
};
BruteWeights brute_weights(const Triple& mu, int N);

enum class Side { DT, PT };

struct WeightReport {
  int N = 0;
  std::int64_t w_min = 0, w_tilde_min = 0, w_tilde_u = 0, w_tilde_d = 0;
  std::int64_t w_base = 0, w_up = 0, w_down = 0;
  std::int64_t A_dt = 0, B_dt = 0, C_dt = 0;
  std::int64_t A_pt = 0, B_pt = 0, C_pt = 0;
  int K = 0;
  bool has_updown = false;
};

WeightReport weight_report(const Triple& mu, int N);

// C - A = -K (DT) or +K (PT), A = B, and C - A unchanged at N, N+1, N+2. Needs N >= M+1.
bool verify_ca_identity(Side side, const Triple& mu, int N);

enum class VertexKind { VoverM, W };

struct CondensationResult {
  bool holds = false;
  int lo = 0, hi = 0;  // compared exponent window
  QLaurent lhs, rhs;
};

// q^K X X(rc,rc) = q^K X(rc,.) X(.,rc) + X(r,c) X(c,r), each factor known through its valuation + depth.
// For X = V/M both sides are multiplied by M(q)^2, leaving the identity for V.
CondensationResult verify_condensation(VertexKind kind, const Triple& mu, int depth);

struct PtdtResult {
  bool holds = false;
  int lo = 0, hi = 0;
  QLaurent dt, product;
};

// dt_vertex(mu, T) against M(q) pt_vertex(mu, T) on [valuation, T].
PtdtResult verify_ptdt(const Triple& mu, int T);

}  // namespace ptdt
