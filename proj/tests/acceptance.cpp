// Acceptance gate: one pass/fail line per criterion; exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "scarforge/circuit.hpp"
#include "scarforge/dynamics.hpp"
#include "scarforge/hamiltonians.hpp"
#include "scarforge/metrics.hpp"
#include "scarforge/mps_compile.hpp"
#include "scarforge/refstates.hpp"
#include "scarforge/scarprep.hpp"
#include "scarforge/statevector.hpp"
#include "scarforge/xiprep.hpp"

using namespace scarforge;

namespace {

bool g_all_ok = true;

void run(int index, const std::string& label,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("%s criterion %d (%s): %s [%.1fs]\n", ok ? "PASS" : "FAIL",
              index, label.c_str(), detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) g_all_ok = false;
}

Statevector embed_inner(const Statevector& inner) {
  Statevector full = zero_state(inner.n_qubits + 2);
  full.amps.setZero();
  for (std::int64_t x = 0; x < inner.dim(); ++x)
    full.amps[x << 1] = inner.amps[x];
  return full;
}

}  // namespace

int main() {
  run(1, "linear circuit exactness", [](std::string& d) {
    double worst = 1;
    for (int N = 4; N <= 16; ++N)
      for (double xi : {0.0, 0.5, 1.0, 2.0})
        for (bool tilde : {true, false}) {
          const Statevector out =
              embed_inner(simulate(build_linear_circuit(N - 2, xi, tilde)));
          const Statevector oracle =
              tilde ? tilde_transform(xi_state(N, xi)) : xi_state(N, xi);
          worst = std::min(worst, fidelity(out, oracle));
        }
    d = "min fidelity " + std::to_string(worst);
    return worst >= 1 - 1e-10;
  });

  run(2, "stitching probabilities and fidelity", [](std::string& d) {
    const Rational r22 = success_probability_closed(2, 2);
    bool ok = (r22.num == 8 && r22.den == 9);
    for (auto [m, k] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 6}, {3, 2}, {4, 3}, {6, 2}})
      ok = ok && std::abs(success_probability_closed(m, k).value() -
                          success_probability_exact(m, k, 1)) < 1e-12;
    double worst = 1;
    for (auto [m, k] :
         std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
      StitchPlan plan{k, m, 1};
      const PostselectResult post =
          postselect_ancillas(simulate(build_stitch_circuit(plan)), k * m);
      ok = ok && post.valid;
      worst =
          std::min(worst, fidelity(post.state, xi_inner_state(k * m, 1, true)));
    }
    // Fixed total length 12: longer blocks succeed more often.
    const std::vector<std::pair<int, int>> splits = {
        {2, 6}, {3, 4}, {4, 3}, {6, 2}};
    for (std::size_t i = 0; i + 1 < splits.size(); ++i)
      ok = ok && success_probability_closed(splits[i + 1].first,
                                            splits[i + 1].second)
                         .value() >
                     success_probability_closed(splits[i].first,
                                                splits[i].second)
                         .value();
    d = "8/9 exact, min postselected fidelity " + std::to_string(worst);
    return ok && worst >= 1 - 1e-10;
  });

  run(3, "tensor-train pipeline", [](std::string& d) {
    double res = 0, worst = 1;
    for (int m = 1; m <= 12; ++m)
      for (int k = 1; 2 * k <= m + 1; ++k) {
        const Statevector got = mps_to_state(projected_dicke_mps(m, k));
        const Statevector want = projected_dicke(m, k);
        res = std::max(res, (got.amps - want.amps).norm());
        if (m >= 2)
          worst = std::min(
              worst,
              fidelity(simulate(staircase_to_circuit(
                           compile_mps(projected_dicke_mps(m, k)))),
                       want));
      }
    std::mt19937_64 rng(4242);
    auto rnd = [&] {
      return static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
    };
    for (int inst = 0; inst < 10; ++inst) {
      Mps mps;
      mps.m = 6;
      mps.chi = 2;
      for (int i = 0; i < mps.m; ++i) {
        Eigen::MatrixXd a(2, 2), b(2, 2);
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) {
            a(r, c) = rnd();
            b(r, c) = rnd();
          }
        mps.m0.push_back(a);
        mps.m1.push_back(b);
      }
      mps.L = Eigen::RowVectorXd(2);
      mps.L << rnd(), rnd();
      mps.R = Eigen::VectorXd(2);
      mps.R << rnd(), rnd();
      worst = std::min(
          worst, fidelity(simulate(staircase_to_circuit(compile_mps(mps))),
                          mps_to_state(mps)));
    }
    const double f62 =
        fidelity(simulate(staircase_to_circuit(
                     compile_mps(projected_dicke_mps(6, 2)))),
                 projected_dicke(6, 2));
    d = "max residual " + std::to_string(res) + ", min compile fidelity " +
        std::to_string(std::min(worst, f62));
    return res < 1e-12 && worst >= 1 - 1e-8 && f62 >= 1 - 1e-8;
  });

  run(4, "weight-sector recursion", [](std::string& d) {
    double res = 0;
    for (int n = 3; n <= 14; ++n)
      for (int k = 1; 2 * k <= n + 1; ++k) {
        if (binomial(n - k, k - 1) < 1 || binomial(n - k + 1, k) < 1) continue;
        const Statevector lhs = projected_dicke(n, k);
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(lhs.dim());
        const double c1 = std::sqrt(static_cast<double>(k) / (n - k + 1));
        const double c2 =
            std::sqrt(static_cast<double>(n - 2 * k + 1) / (n - k + 1));
        const Statevector a = projected_dicke(n - 2, k - 1);
        for (std::int64_t x = 0; x < a.dim(); ++x)
          rhs[(x << 2) | 1] += c1 * a.amps[x];
        if (binomial(n - k, k) >= 1) {
          const Statevector b = projected_dicke(n - 1, k);
          for (std::int64_t x = 0; x < b.dim(); ++x)
            rhs[x << 1] += c2 * b.amps[x];
        }
        res = std::max(res, (lhs.amps - rhs).norm());
      }
    d = "max residual " + std::to_string(res);
    return res < 1e-12;
  });

  run(5, "variational ansatz", [](std::string& d) {
    for (int N = 4; N <= 16; ++N)
      for (int k = 1; 2 * k + 2 <= N; ++k)
        if (build_ansatz(N, k).n_angles != ansatz_angle_count(N, k)) {
          d = "parameter-count mismatch at N=" + std::to_string(N);
          return false;
        }
    struct Case {
      int N, k;
      double tol;
    };
    const std::vector<Case> cases = {{13, 5, 1e-8}, {14, 5, 1e-8},
                                     {14, 6, 1e-8}, {16, 7, 1e-8},
                                     {14, 3, 1e-2}, {15, 4, 1e-2},
                                     {16, 4, 1e-2}};
    std::string report;
    for (const Case& c : cases) {
      OptimizeResult best =
          optimize_ansatz(c.N, c.k, 2000, 1, c.tol * 0.99);
      if (best.infidelity >= c.tol)  // stochastic: retry with a second seed
        best = optimize_ansatz(c.N, c.k, 2000, 777, c.tol * 0.99);
      report += " (" + std::to_string(c.N) + "," + std::to_string(c.k) +
                ")=" + std::to_string(best.infidelity);
      if (best.infidelity >= c.tol) {
        d = "infidelity too high:" + report;
        return false;
      }
    }
    d = "counts exact; infidelities:" + report;
    return true;
  });

  run(6, "top-of-tower circuits", [](std::string& d) {
    double worst = 1, hj_err = 0;
    bool counts_ok = true;
    for (int N : {6, 8, 10, 12, 14}) {
      const Circuit c = kmax_circuit(N);
      counts_ok = counts_ok && gate_counts(c).two_qubit_gates == N - 3;
      worst = std::min(worst, fidelity(tilde_transform(simulate(c)),
                                       scar_state(N, N / 2 - 1)));
      const Statevector comp = simulate(kmax_compressed_circuit(N));
      hj_err = std::max(hj_err, std::abs(expectation(build_hj_compressed(N),
                                                     comp) +
                                         (N - 3)));
    }
    // Pair-encoding rules vs full-space conjugation at N = 6.
    bool rules_ok = true;
    const char labels[] = {'I', 'X', 'Y', 'Z'};
    for (int sp = 0; sp < 2; ++sp)
      for (char pe : labels)
        for (char po : labels) {
          const CompressedPauli enc = encode_pauli_pair(pe, po);
          for (std::int64_t u = 0; u < 4 && rules_ok; ++u)
            for (std::int64_t v = 0; v < 4; ++v) {
              const Statevector du = decode_compressed(basis_state(2, u));
              const Statevector dv = decode_compressed(basis_state(2, v));
              const cdouble lhs = inner_product(
                  du, matvec(op_from_terms(
                                 6, {{1,
                                      {{2 * sp + 2, pauli_matrix(pe)},
                                       {2 * sp + 3, pauli_matrix(po)}}}}),
                             dv));
              const cdouble rhs = inner_product(
                  basis_state(2, u),
                  matvec(op_from_terms(
                             2, {{enc.coeff,
                                  {{sp + 1, pauli_matrix(enc.pauli)}}}}),
                         basis_state(2, v)));
              if (std::abs(lhs - rhs) >= 1e-12) {
                rules_ok = false;
                break;
              }
            }
        }
    d = "min fidelity " + std::to_string(worst) + ", max witness error " +
        std::to_string(hj_err);
    return counts_ok && rules_ok && worst >= 1 - 1e-10 && hj_err < 1e-10;
  });

  run(7, "spectral and entanglement properties", [](std::string& d) {
    std::mt19937_64 rng(99);
    auto rnd = [&] {
      return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2 - 1;
    };
    double eig_res = 0;
    for (int trial = 0; trial < 3; ++trial) {
      const double lambda = rnd(), delta = rnd(), j = rnd();
      for (int N = 4; N <= 14; N += 2) {
        const SparseOp h = build_h0(N, lambda, delta, j);
        for (int k = 0; k <= N / 2 - 1; ++k) {
          const Statevector s = scar_state(N, k);
          eig_res = std::max(
              eig_res,
              (matvec(h, s).amps - scar_energy(N, k, delta, j) * s.amps)
                  .norm());
        }
      }
    }
    double hxi_expect = 0;
    for (int N = 4; N <= 14; N += 2)
      for (double xi : {0.5, 1.0, 2.0})
        hxi_expect = std::max(
            hxi_expect,
            std::abs(expectation(build_hxi(N, xi), xi_state(N, xi))));
    double min_eig = 0;
    for (int N = 4; N <= 10; N += 2)
      min_eig = std::min(min_eig, lowest_eigenvalues(build_hxi(N, 1.0), 1)[0]);
    double max_entropy = 0;
    for (int N = 4; N <= 14; ++N)
      for (double xi : {0.5, 1.0, 2.0}) {
        const Statevector s = xi_state(N, xi);
        for (int cut = 1; cut < N; ++cut)
          max_entropy = std::max(max_entropy, entanglement_entropy(s, cut));
      }
    d = "eigen residual " + std::to_string(eig_res) + ", max cut entropy " +
        std::to_string(max_entropy);
    return eig_res < 1e-10 && hxi_expect < 1e-10 && min_eig >= -1e-10 &&
           max_entropy <= std::log(2.0) + 1e-10;
  });

  run(8, "revivals and magnetization projection", [](std::string& d) {
    const double delta = 0.7, j = 0.3;
    const double period = 3.14159265358979323846 / (delta + 2 * j);
    bool ok = true;
    for (int N = 4; N <= 14; N += 2)
      for (double xi : {0.5, 1.0, 2.0})
        ok = ok &&
             std::abs(revival_fidelity(N, xi, delta, j, period) - 1) < 1e-12;
    double perr = 0, fworst = 1;
    for (int N : {8, 14})
      for (double xi : {0.5, 1.0}) {
        const Statevector s = xi_state(N, xi);
        const double z = z_norm(N, xi);
        for (int k = 0; k <= N / 2 - 1; ++k) {
          const MzProjection proj = project_magnetization(s, k);
          ok = ok && proj.valid;
          perr = std::max(
              perr, std::abs(proj.probability - std::pow(xi * xi, k) *
                                                    count_constrained(N, k) /
                                                    z));
          fworst = std::min(fworst, fidelity(proj.state, scar_state(N, k)));
        }
      }
    d = "probability error " + std::to_string(perr) +
        ", min projected fidelity " + std::to_string(fworst);
    return ok && perr < 1e-12 && fworst >= 1 - 1e-12;
  });

  run(9, "adiabatic preparation", [](std::string& d) {
    bool min_at_end = true;
    for (int N : {8, 10, 12})
      min_at_end = min_at_end && gap_scan(N, 21).min_index == 20;
    const double intercept = gap_extrapolate({8, 10, 12, 14});
    const double fid30 = adiabatic_evolve({8, 30.0, 1000}).fidelity;
    const double fid40 = adiabatic_evolve({8, 40.0, 1000}).fidelity;
    const double tstar = find_Tstar(8, 0.99, 1000);
    d = "intercept " + std::to_string(intercept) + ", T* " +
        std::to_string(tstar);
    return min_at_end && std::abs(intercept - 0.29289321881345254) < 0.03 &&
           std::max(fid30, fid40) >= 0.99 && tstar >= 5 && tstar <= 40;
  });

  run(10, "sampling statistics", [](std::string& d) {
    const Statevector s = xi_inner_state(6, 1, true);
    const Distribution exact = distribution_from_state(s);
    double worst = 0;
    for (std::uint64_t seed : {11ULL, 22ULL, 33ULL})
      worst = std::max(
          worst, bhattacharyya(exact, distribution_from_counts(
                                          sample(s, 100000, seed), 100000, 6)));
    const double self = bhattacharyya(exact, exact);
    d = "max sampled distance " + std::to_string(worst);
    return worst < 0.02 && self == 0;
  });

  return g_all_ok ? 0 : 1;
}
