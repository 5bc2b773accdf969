// ptdt: command line driver for the vertex pipelines and verifiers.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ptdt/box_geometry.hpp"
#include "ptdt/double_dimer.hpp"
#include "ptdt/dt_vertex.hpp"
#include "ptdt/errors.hpp"
#include "ptdt/honeycomb.hpp"
#include "ptdt/pt_vertex.hpp"
#include "ptdt/render.hpp"
#include "ptdt/weights.hpp"

using namespace ptdt;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string mu1, mu2, mu3;
  int T = 4;
  int N = 0;
  std::string out;
  std::string format = "json";
  std::string kind = "tiling";
  std::string vertex = "vm";
  int max_depth = 10;
  int max_N = 6;
};

Triple triple_of(const RunConfig& c) {
  return Triple{parse_partition(c.mu1), parse_partition(c.mu2), parse_partition(c.mu3)};
}

int valuation_of(const Triple& mu) {
  const RegionStats st = region_stats(mu);
  return -st.II - 2 * st.III;
}

void check_T(const RunConfig& c, const Triple& mu) {
  const int depth = c.T - valuation_of(mu);
  if (depth < 0) throw UsageError("-T lies below the valuation " + std::to_string(valuation_of(mu)));
  if (depth > c.max_depth)
    throw UsageError("-T is " + std::to_string(depth) + " above the valuation; cap is " + std::to_string(c.max_depth));
}

int resolve_N(const RunConfig& c, const Triple& mu) {
  const int M = constant_M(mu);
  const int N = c.N > 0 ? c.N : M + 1;
  if (N < std::max(M, 1)) throw UsageError("-N must be at least M = " + std::to_string(M));
  if (N > c.max_N) throw UsageError("-N is " + std::to_string(N) + "; cap is " + std::to_string(c.max_N));
  return N;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot open " + c.out);
  f << text;
}

void emit_series(const RunConfig& c, const QLaurent& s) {
  if (c.format == "text") emit(c, s.str() + "\n");
  else emit(c, to_json(s).dump(2) + "\n");
}

void emit_report(const RunConfig& c, const json& j, const std::string& text) {
  if (c.format == "text") emit(c, text);
  else emit(c, j.dump(2) + "\n");
}

int run_verify_ptdt(const RunConfig& c) {
  const Triple mu = triple_of(c);
  check_T(c, mu);
  const PtdtResult r = verify_ptdt(mu, c.T);
  json j{{"command", "verify-ptdt"}, {"mu", triple_str(mu)}, {"holds", r.holds}, {"lo", r.lo}, {"hi", r.hi},
         {"dt", to_json(r.dt)}, {"macmahon_times_pt", to_json(r.product)}};
  std::ostringstream t;
  t << "V = M(q) W on [" << r.lo << ", " << r.hi << "]: " << (r.holds ? "holds" : "FAILS") << "\n"
    << "  V      = " << r.dt << "\n  M(q) W = " << r.product << "\n";
  emit_report(c, j, t.str());
  return r.holds ? 0 : kExitFail;
}

int run_verify_condensation(const RunConfig& c) {
  const Triple mu = triple_of(c);
  if (c.vertex != "vm" && c.vertex != "w") throw UsageError("--vertex must be vm or w");
  if (c.T < 0 || c.T > c.max_depth) throw UsageError("-T (relative depth) must lie in [0, " + std::to_string(c.max_depth) + "]");
  const VertexKind k = c.vertex == "vm" ? VertexKind::VoverM : VertexKind::W;
  const CondensationResult r = verify_condensation(k, mu, c.T);
  json j{{"command", "verify-condensation"}, {"vertex", c.vertex}, {"mu", triple_str(mu)}, {"holds", r.holds},
         {"K", constant_K(mu[0], mu[1])}, {"lo", r.lo}, {"hi", r.hi}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}};
  std::ostringstream t;
  t << "condensation for " << (k == VertexKind::VoverM ? "V/M" : "W") << " on [" << r.lo << ", " << r.hi
    << "]: " << (r.holds ? "holds" : "FAILS") << "\n  lhs = " << r.lhs << "\n  rhs = " << r.rhs << "\n";
  emit_report(c, j, t.str());
  return r.holds ? 0 : kExitFail;
}

int run_verify_weights(const RunConfig& c) {
  const Triple mu = triple_of(c);
  const int N = resolve_N(c, mu);
  const WeightReport w = weight_report(mu, N);
  json j{{"command", "verify-weights"}, {"mu", triple_str(mu)}, {"N", N}, {"w_min", w.w_min},
         {"w_tilde_min", w.w_tilde_min}, {"w_base", w.w_base}};
  bool ok = true;
  const BruteWeights b = brute_weights(mu, N);
  json brute{{"w_tilde_min", b.w_tilde_min}, {"w_base", b.w_base}};
  ok = ok && b.w_tilde_min == w.w_tilde_min && b.w_base == w.w_base;
  if (w.has_updown) {
    j.update(json{{"w_tilde_u", w.w_tilde_u}, {"w_tilde_d", w.w_tilde_d}, {"w_up", w.w_up}, {"w_down", w.w_down},
                  {"K", w.K}, {"dt", {{"A", w.A_dt}, {"B", w.B_dt}, {"C", w.C_dt}}},
                  {"pt", {{"A", w.A_pt}, {"B", w.B_pt}, {"C", w.C_pt}}}});
    if (b.has_updown) {
      brute.update(json{{"w_tilde_u", b.w_tilde_u}, {"w_tilde_d", b.w_tilde_d}, {"w_up", b.w_up}, {"w_down", b.w_down}});
      ok = ok && b.w_tilde_u == w.w_tilde_u && b.w_tilde_d == w.w_tilde_d && b.w_up == w.w_up && b.w_down == w.w_down;
      const bool dt = verify_ca_identity(Side::DT, mu, N), pt = verify_ca_identity(Side::PT, mu, N);
      j["ca_identity"] = {{"dt", dt}, {"pt", pt}};
      ok = ok && dt && pt;
    }
  }
  j["brute_force"] = brute;
  j["holds"] = ok;
  std::ostringstream t;
  t << "weights at N = " << N << ": " << (ok ? "closed forms agree" : "MISMATCH") << "\n" << j.dump(2) << "\n";
  emit_report(c, j, t.str());
  return ok ? 0 : kExitFail;
}

int run_render(const RunConfig& c) {
  const Triple mu = triple_of(c);
  const int N = resolve_N(c, mu);
  if (c.format == "json") {
    emit(c, graph_json(remove_for_maya(build_h(N), mu)).dump(2) + "\n");
    return 0;
  }
  if (c.format != "svg") throw UsageError("render supports --format svg or json");
  if (c.kind == "tiling") {
    const Truncation t = truncate_surface(dt_surface(mu), N);
    emit(c, render_tiling_svg(N, t.edges, t.nodes));
  } else if (c.kind == "dd") {
    const RegionCells rc = region_cells(mu);
    std::vector<Cell> B = rc.II;
    B.insert(B.end(), rc.III.begin(), rc.III.end());
    const DoubleDimerConfig d = ab_to_dd(make_ab(rc.III, B), mu, N);
    emit(c, render_dd_svg(d, node_set(N, mu)));
  } else {
    throw UsageError("--kind must be tiling or dd");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DT/PT topological vertex engine"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* s, bool wants_T, bool wants_N) {
    s->add_option("--mu1", cfg.mu1, "first partition, e.g. 3,2 (empty for none)");
    s->add_option("--mu2", cfg.mu2, "second partition");
    s->add_option("--mu3", cfg.mu3, "third partition");
    if (wants_T) s->add_option("-T", cfg.T, "truncation exponent");
    if (wants_N) s->add_option("-N", cfg.N, "honeycomb size (default M+1)");
    s->add_option("--out", cfg.out, "output file (default stdout)");
    s->add_option("--format", cfg.format, "json, text or svg")->check(CLI::IsMember({"json", "text", "svg"}));
    s->add_option("--max-depth", cfg.max_depth, "cap on T above the valuation");
    s->add_option("--max-N", cfg.max_N, "cap on N");
  };

  auto* vdt = app.add_subcommand("vertex-dt", "V(mu) by plane partition enumeration");
  auto* vpt = app.add_subcommand("vertex-pt", "W(mu) by AB configuration enumeration");
  auto* vdd = app.add_subcommand("vertex-dt-dimer", "V(mu) from the dimer model on H(N; mu)");
  auto* vpd = app.add_subcommand("vertex-pt-dd", "W(mu) from the double-dimer model on H(N)");
  auto* fpt = app.add_subcommand("verify-ptdt", "check V = M(q) W");
  auto* fcd = app.add_subcommand("verify-condensation", "check the condensation recurrence");
  auto* fwt = app.add_subcommand("verify-weights", "closed-form weights against the graphs");
  auto* ren = app.add_subcommand("render", "SVG of a tiling or double-dimer configuration");
  common(vdt, true, false);
  common(vpt, true, false);
  common(vdd, false, true);
  common(vpd, false, true);
  common(fpt, true, false);
  common(fcd, true, false);
  common(fwt, false, true);
  common(ren, false, true);
  fcd->add_option("--vertex", cfg.vertex, "vm (V/M) or w");
  ren->add_option("--kind", cfg.kind, "tiling or dd");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*vdt || *vpt) {
      const Triple mu = triple_of(cfg);
      check_T(cfg, mu);
      emit_series(cfg, *vdt ? dt_vertex(mu, cfg.T) : pt_vertex(mu, cfg.T));
      return 0;
    }
    if (*vdd || *vpd) {
      const Triple mu = triple_of(cfg);
      const int N = resolve_N(cfg, mu);
      emit_series(cfg, *vdd ? dt_via_dimers(mu, N) : pt_window_via_dd(mu, N));
      return 0;
    }
    if (*fpt) return run_verify_ptdt(cfg);
    if (*fcd) return run_verify_condensation(cfg);
    if (*fwt) return run_verify_weights(cfg);
    if (*ren) return run_render(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "bad partition: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EmptyPartition& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
