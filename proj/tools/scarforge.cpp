#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <Eigen/Core>
#include <json.hpp>

#include "scarforge/circuit.hpp"
#include "scarforge/dynamics.hpp"
#include "scarforge/hamiltonians.hpp"
#include "scarforge/metrics.hpp"
#include "scarforge/mps_compile.hpp"
#include "scarforge/refstates.hpp"
#include "scarforge/scarprep.hpp"
#include "scarforge/xiprep.hpp"

namespace {

using nlohmann::json;
using namespace scarforge;

struct Report {
  json doc;
  bool pass = true;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  explicit Report(const std::string& command) {
    doc["command"] = command;
    doc["parameters"] = json::object();
    doc["metrics"] = json::object();
  }

  void param(const std::string& key, const json& v) {
    doc["parameters"][key] = v;
  }
  void metric(const std::string& key, const json& v) { doc["metrics"][key] = v; }
  void metric_real(const std::string& key, double v) {
    doc["metrics"][key] = std::isfinite(v) ? json(v) : json("inf");
  }
  void require(const std::string& name, bool ok) {
    doc["metrics"][name] = ok ? "pass" : "fail";
    pass = pass && ok;
  }

  int finish() {
    const auto dt = std::chrono::steady_clock::now() - start;
    doc["wall_time_s"] =
        std::chrono::duration_cast<std::chrono::duration<double>>(dt).count();
    doc["pass"] = pass;
    std::cout << doc.dump(2) << "\n";
    return pass ? 0 : 1;
  }
};

void write_circuit(const Circuit& c, const std::string& path) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << to_json(c) << "\n";
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::pair<double, double>>& rows) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << header << "\n";
  for (const auto& [a, b] : rows) f << a << "," << b << "\n";
}

Statevector embed_boundaries(const Statevector& inner) {
  Statevector out = zero_state(inner.n_qubits + 2);
  out.amps.setZero();
  for (std::int64_t x = 0; x < inner.dim(); ++x)
    out.amps[x << 1] = inner.amps[x];
  return out;
}

int cmd_xi_linear(int n, double xi, bool tilde, double tol,
                  const std::string& out) {
  Report rep("xi linear");
  rep.param("n", n);
  rep.param("xi", xi);
  rep.param("tilde", tilde);
  const int m = n - 2;
  const Circuit c = build_linear_circuit(m, xi, tilde);
  write_circuit(c, out);
  const Statevector got = simulate(c);
  const Statevector want = xi_inner_state(m, cdouble(xi), tilde);
  const double fid = fidelity(got, want);
  rep.metric("fidelity", fid);
  const GateCounts gc = gate_counts(c);
  rep.metric("two_qubit_gates", gc.two_qubit_gates);
  rep.metric("cnot_equivalent", gc.cnot_equivalent);
  rep.require("fidelity_ok", fid >= 1 - tol);
  return rep.finish();
}

int cmd_xi_stitch(int n, int block, double xi, std::uint64_t shots,
                  std::uint64_t seed, double tol, const std::string& out,
                  const std::string& csv) {
  Report rep("xi stitch");
  rep.param("n", n);
  rep.param("block", block);
  rep.param("xi", xi);
  if (block < 1 || n % block != 0)
    throw CLI::ValidationError("--block must divide --n");
  const int k = n / block;
  StitchPlan plan{k, block, xi};
  const Circuit c = build_stitch_circuit(plan, true);
  write_circuit(c, out);
  const Statevector full = simulate(c);
  const PostselectResult post = postselect_ancillas(full, n);
  const double fid = post.valid
                         ? fidelity(post.state, xi_inner_state(n, xi, true))
                         : 0;
  rep.metric("fidelity", fid);
  rep.metric("success_probability_exact", post.probability);
  const double exact = success_probability_exact(block, k, xi);
  rep.metric("projection_weight", exact);
  if (xi == 1) {
    const Rational r = success_probability_closed(block, k);
    rep.metric("success_probability_closed",
               std::to_string(r.num) + "/" + std::to_string(r.den));
    rep.metric("success_probability_closed_value", r.value());
    rep.require("closed_matches_exact", std::abs(r.value() - exact) < 1e-12);
  }
  if (shots > 0) {
    rep.param("shots", shots);
    rep.param("seed", seed);
    const auto counts = sample(full, shots, seed);
    std::uint64_t kept = 0;
    const int anc = plan.ancilla_count();
    for (const auto& [idx, cnt] : counts)
      if ((idx & ((std::uint64_t{1} << anc) - 1)) == 0) kept += cnt;
    rep.metric("success_probability_sampled",
               static_cast<double>(kept) / static_cast<double>(shots));
  }
  if (!csv.empty()) {
    std::vector<std::pair<double, double>> rows;
    for (int kk = 1; kk <= 8 && kk * block <= 24; ++kk)
      rows.emplace_back(kk * block,
                        success_probability_closed(block, kk).value());
    write_csv(csv, "n,success_probability", rows);
  }
  rep.require("fidelity_ok", fid >= 1 - tol);
  rep.require("postselect_matches_projection",
              std::abs(post.probability - exact) < 1e-10);
  return rep.finish();
}

int cmd_sk_mps(int m, int k, double tol, const std::string& out) {
  Report rep("sk mps");
  rep.param("m", m);
  rep.param("k", k);
  const Mps mps = projected_dicke_mps(m, k);
  const IsometryStaircase st = compile_mps(mps);
  const Circuit c = staircase_to_circuit(st);
  write_circuit(c, out);
  const double fid = fidelity(simulate(c), projected_dicke(m, k));
  rep.metric("fidelity", fid);
  rep.metric("depth_estimate", depth_estimate(m, k));
  rep.metric("blocks", static_cast<int>(st.blocks.size()));
  rep.require("fidelity_ok", fid >= 1 - tol);
  return rep.finish();
}

int cmd_sk_variational(int n, int k, int restarts, std::uint64_t seed,
                       double tol, const std::string& csv) {
  Report rep("sk variational");
  rep.param("n", n);
  rep.param("k", k);
  rep.param("restarts", restarts);
  rep.param("seed", seed);
  const OptimizeResult res = optimize_ansatz(n, k, restarts, seed);
  rep.metric("infidelity", res.infidelity);
  rep.metric("n_angles", static_cast<int>(res.theta.size()));
  rep.metric("best_restart", res.best_restart);
  rep.metric("angles", res.theta);
  if (!csv.empty()) {
    std::vector<std::pair<double, double>> rows;
    for (std::size_t i = 0; i < res.restart_infidelities.size(); ++i)
      rows.emplace_back(static_cast<double>(i), res.restart_infidelities[i]);
    write_csv(csv, "restart,infidelity", rows);
  }
  rep.require("infidelity_ok", res.infidelity < tol);
  return rep.finish();
}

int cmd_sk_kmax(int n, bool compressed, double tol, const std::string& out) {
  Report rep("sk kmax");
  rep.param("n", n);
  rep.param("compressed", compressed);
  const int kmax = n / 2 - 1;
  const SparseOp hj = build_hj_compressed(n);
  if (compressed) {
    const Circuit c = kmax_compressed_circuit(n);
    write_circuit(c, out);
    const Statevector got = simulate(c);
    const double hjval = expectation(hj, got);
    rep.metric("hj_expectation", hjval);
    const double fid = fidelity(decode_compressed(got),
                                tilde_transform(scar_state(n, kmax)));
    rep.metric("decoded_fidelity", fid);
    rep.require("hj_ok", std::abs(hjval + (n - 3)) < 1e-10);
    rep.require("fidelity_ok", fid >= 1 - tol);
  } else {
    const Circuit c = kmax_circuit(n);
    write_circuit(c, out);
    Statevector got = simulate(c);
    const double fid_tilde =
        fidelity(got, tilde_transform(scar_state(n, kmax)));
    got = tilde_transform(got);
    const double fid = fidelity(got, scar_state(n, kmax));
    rep.metric("fidelity_tilde", fid_tilde);
    rep.metric("fidelity", fid);
    const GateCounts gc = gate_counts(c);
    rep.metric("two_qubit_gates", gc.two_qubit_gates);
    const Statevector comp = simulate(kmax_compressed_circuit(n));
    rep.metric("hj_expectation", expectation(hj, comp));
    rep.require("fidelity_ok", fid >= 1 - tol);
    rep.require("gate_count_ok", gc.two_qubit_gates == n - 3);
  }
  return rep.finish();
}

int cmd_adiabatic_sweep(int n, double t, int steps) {
  Report rep("adiabatic sweep");
  rep.param("n", n);
  rep.param("t", t);
  rep.param("steps", steps);
  const SweepResult res = adiabatic_evolve({n, t, steps});
  rep.metric("fidelity", res.fidelity);
  return rep.finish();
}

int cmd_adiabatic_gap(int n, int points, const std::string& csv) {
  Report rep("adiabatic gap");
  rep.param("n", n);
  rep.param("points", points);
  const GapCurve curve = gap_scan(n, points);
  rep.metric("min_gap", curve.gap[static_cast<std::size_t>(curve.min_index)]);
  rep.metric("min_at_s_over_t",
             curve.s_over_t[static_cast<std::size_t>(curve.min_index)]);
  if (!csv.empty()) {
    std::vector<std::pair<double, double>> rows;
    for (std::size_t i = 0; i < curve.gap.size(); ++i)
      rows.emplace_back(curve.s_over_t[i], curve.gap[i]);
    write_csv(csv, "s_over_t,gap", rows);
  }
  rep.require("minimum_at_endpoint", curve.min_index == points - 1);
  return rep.finish();
}

int cmd_adiabatic_tstar(int n, double target, int steps) {
  Report rep("adiabatic tstar");
  rep.param("n", n);
  rep.param("target", target);
  rep.metric("t_star", find_Tstar(n, target, steps));
  return rep.finish();
}

int cmd_verify_revival(int n, double xi, double delta, double j,
                       const std::string& t_text) {
  Report rep("verify revival");
  rep.param("n", n);
  rep.param("xi", xi);
  rep.param("delta", delta);
  rep.param("j", j);
  double t;
  const bool auto_t = t_text == "auto";
  if (auto_t)
    t = 3.14159265358979323846 / (delta + 2 * j);
  else
    t = std::stod(t_text);
  rep.param("t", t);
  const double fid = revival_fidelity(n, xi, delta, j, t);
  rep.metric("revival_fidelity", fid);
  if (auto_t) rep.require("perfect_revival", std::abs(fid - 1) < 1e-12);
  return rep.finish();
}

int cmd_verify_project_mz(int n, double xi, int k) {
  Report rep("verify project-mz");
  rep.param("n", n);
  rep.param("xi", xi);
  rep.param("k", k);
  const MzProjection proj = project_magnetization(xi_state(n, xi), k);
  rep.metric("probability", proj.probability);
  const double expected =
      std::pow(xi * xi, k) * static_cast<double>(count_constrained(n, k)) /
      z_norm(n, xi);
  rep.metric("probability_expected", expected);
  const double fid = proj.valid ? fidelity(proj.state, scar_state(n, k)) : 0;
  rep.metric("fidelity_vs_tower_state", fid);
  rep.require("probability_ok", std::abs(proj.probability - expected) < 1e-12);
  rep.require("fidelity_ok", fid >= 1 - 1e-10);
  return rep.finish();
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("SCARFORGE_THREADS"))
    Eigen::setNbThreads(std::max(1, std::atoi(threads)));

  CLI::App app{"Constrained-superposition circuit workbench"};
  app.require_subcommand(1);

  int n = 8, k = 2, block = 2, steps = 1000, points = 11, restarts = 100;
  int m = 6;
  double xi = 1, tol = 1e-10, mps_tol = 1e-8, vtol = 1e-2, t = 10,
         target = 0.99, delta = 1, jj = 0.5;
  std::uint64_t shots = 0, seed = 1;
  std::string out, csv, t_text = "auto";
  bool tilde = false, compressed = false;

  auto* xi_cmd = app.add_subcommand("xi", "Superposition-state circuits");
  xi_cmd->require_subcommand(1);
  auto* lin = xi_cmd->add_subcommand("linear", "Linear-depth circuit");
  lin->add_option("--n", n)->required();
  lin->add_option("--xi", xi);
  lin->add_flag("--tilde", tilde);
  lin->add_option("--tol", tol);
  lin->add_option("--out", out);
  auto* st = xi_cmd->add_subcommand("stitch", "Block stitching protocol");
  st->add_option("--n", n)->required();
  st->add_option("--block", block)->required();
  st->add_option("--xi", xi);
  st->add_option("--shots", shots);
  st->add_option("--seed", seed);
  st->add_option("--tol", tol);
  st->add_option("--out", out);
  st->add_option("--csv", csv);

  auto* sk = app.add_subcommand("sk", "Tower-eigenstate circuits");
  sk->require_subcommand(1);
  auto* mpsc = sk->add_subcommand("mps", "Tensor-train compiled circuit");
  mpsc->add_option("--m", m)->required();
  mpsc->add_option("--k", k)->required();
  mpsc->add_option("--tol", mps_tol);
  mpsc->add_option("--out", out);
  auto* var = sk->add_subcommand("variational", "Staircase ansatz optimizer");
  var->add_option("--n", n)->required();
  var->add_option("--k", k)->required();
  var->add_option("--restarts", restarts);
  var->add_option("--seed", seed);
  var->add_option("--tol", vtol);
  var->add_option("--csv", csv);
  auto* kmx = sk->add_subcommand("kmax", "Top-of-tower circuit");
  kmx->add_option("--n", n)->required();
  kmx->add_flag("--compressed", compressed);
  kmx->add_option("--tol", tol);
  kmx->add_option("--out", out);

  auto* ad = app.add_subcommand("adiabatic", "Interpolating-sweep analysis");
  ad->require_subcommand(1);
  auto* sw = ad->add_subcommand("sweep", "Evolve and report fidelity");
  sw->add_option("--n", n)->required();
  sw->add_option("--t", t)->required();
  sw->add_option("--steps", steps);
  auto* gp = ad->add_subcommand("gap", "Instantaneous gap curve");
  gp->add_option("--n", n)->required();
  gp->add_option("--points", points);
  gp->add_option("--csv", csv);
  auto* ts = ad->add_subcommand("tstar", "Minimal sweep time for target");
  ts->add_option("--n", n)->required();
  ts->add_option("--target", target);
  ts->add_option("--steps", steps);

  auto* ver = app.add_subcommand("verify", "State-identity checks");
  ver->require_subcommand(1);
  auto* rev = ver->add_subcommand("revival", "Periodic return fidelity");
  rev->add_option("--n", n)->required();
  rev->add_option("--xi", xi);
  rev->add_option("--delta", delta);
  rev->add_option("--j", jj);
  rev->add_option("--t", t_text);
  auto* pmz = ver->add_subcommand("project-mz", "Magnetization projection");
  pmz->add_option("--n", n)->required();
  pmz->add_option("--xi", xi);
  pmz->add_option("--k", k)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (lin->parsed()) return cmd_xi_linear(n, xi, tilde, tol, out);
    if (st->parsed())
      return cmd_xi_stitch(n, block, xi, shots, seed, tol, out, csv);
    if (mpsc->parsed()) return cmd_sk_mps(m, k, mps_tol, out);
    if (var->parsed())
      return cmd_sk_variational(n, k, restarts, seed, vtol, csv);
    if (kmx->parsed()) return cmd_sk_kmax(n, compressed, tol, out);
    if (sw->parsed()) return cmd_adiabatic_sweep(n, t, steps);
    if (gp->parsed()) return cmd_adiabatic_gap(n, points, csv);
    if (ts->parsed()) return cmd_adiabatic_tstar(n, target, steps);
    if (rev->parsed()) return cmd_verify_revival(n, xi, delta, jj, t_text);
    if (pmz->parsed()) return cmd_verify_project_mz(n, xi, k);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
