#include "scarforge/dynamics.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

#include <Eigen/Dense>

#include "scarforge/refstates.hpp"

namespace scarforge {

namespace {

Eigen::VectorXcd reduced_target(int N) {
  const Statevector xi = xi_state(N, 1.0);
  const std::int64_t dim = std::int64_t{1} << (N - 2);
  Eigen::VectorXcd t(dim);
  for (std::int64_t r = 0; r < dim; ++r) t[r] = xi.amps[r << 1];
  return t;
}

struct Eig {
  Eigen::MatrixXcd v;
  Eigen::VectorXd e;
};

// Eigendecompositions of the reduced interpolating Hamiltonian on the
// fraction grid n/n_s; the grid is independent of T, so sweeps at many T
// values share them.
const std::vector<Eig>& dense_sweep_cache(int N, int n_s) {
  static std::map<std::pair<int, int>, std::vector<Eig>> cache;
  auto& slot = cache[{N, n_s}];
  if (!slot.empty()) return slot;
  const SparseOp hx = restrict_boundary_zero(build_hx(N), N);
  const SparseOp hp = restrict_boundary_zero(build_hp(N), N);
  slot.reserve(static_cast<std::size_t>(n_s));
  for (int n = 0; n < n_s; ++n) {
    const double f = static_cast<double>(n) / n_s;
    Eigen::MatrixXcd h = Eigen::MatrixXcd((1 - f) * hx + f * hp);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    slot.push_back({es.eigenvectors(), es.eigenvalues()});
  }
  return slot;
}

// Krylov approximation of exp(-i dt H) v for Hermitian sparse H.
Eigen::VectorXcd expmv(const SparseOp& h, const Eigen::VectorXcd& v, double dt,
                       double tol, int step_index) {
  const double nrm = v.norm();
  if (nrm == 0) return v;
  const int maxm = 30;
  std::vector<Eigen::VectorXcd> basis = {v / nrm};
  std::vector<double> alpha, beta;
  Eigen::VectorXcd prev;
  for (int m = 1; m <= maxm; ++m) {
    Eigen::VectorXcd w = h * basis.back();
    alpha.push_back(basis.back().dot(w).real());
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : basis) w -= u.dot(w) * u;
    const double b = w.norm();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) t(i, i) = alpha[i];
    for (int i = 0; i + 1 < m; ++i) t(i, i + 1) = t(i + 1, i) = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    Eigen::VectorXcd small =
        es.eigenvectors().cast<cdouble>() *
        ((es.eigenvalues().array() * -dt)
             .unaryExpr([](double x) { return std::polar(1.0, x); })
             .matrix()
             .asDiagonal() *
         es.eigenvectors().row(0).transpose().cast<cdouble>());
    Eigen::VectorXcd approx = Eigen::VectorXcd::Zero(v.size());
    for (int i = 0; i < m; ++i) approx += small[i] * basis[i];
    approx *= nrm;
    if (b < 1e-12 || (m > 1 && (approx - prev).norm() < tol)) return approx;
    prev = std::move(approx);
    if (m == maxm)
      throw std::runtime_error("adiabatic_evolve: Krylov stagnation at step " +
                               std::to_string(step_index));
    beta.push_back(b);
    basis.push_back(w / b);
  }
  return prev;
}

}  // namespace

SweepResult adiabatic_evolve(const SweepConfig& config) {
  const int N = config.N;
  if (N < 4 || N > 18)
    throw std::invalid_argument("adiabatic_evolve: N out of range");
  if (config.n_s < 1 || config.T < 0)
    throw std::invalid_argument("adiabatic_evolve: bad sweep parameters");
  const std::int64_t dim = std::int64_t{1} << (N - 2);
  Eigen::VectorXcd psi = hx_ground_reduced(N);
  const Eigen::VectorXcd target = reduced_target(N);
  if (config.T > 0) {
    const double ds = config.T / config.n_s;
    if (dim <= 1024) {
      const auto& eigs = dense_sweep_cache(N, config.n_s);
      for (const Eig& e : eigs) {
        Eigen::VectorXcd c = e.v.adjoint() * psi;
        for (Eigen::Index i = 0; i < c.size(); ++i)
          c[i] *= std::polar(1.0, -ds * e.e[i]);
        psi = e.v * c;
      }
    } else {
      const SparseOp hx = restrict_boundary_zero(build_hx(N), N);
      const SparseOp hp = restrict_boundary_zero(build_hp(N), N);
      for (int n = 0; n < config.n_s; ++n) {
        const double f = static_cast<double>(n) / config.n_s;
        const SparseOp h = (1 - f) * hx + f * hp;
        psi = expmv(h, psi, ds, 1e-8, n);
      }
    }
  }
  SweepResult res;
  res.fidelity = std::abs(target.dot(psi));
  res.reduced_state = std::move(psi);
  return res;
}

double find_Tstar(int N, double target, int n_s) {
  SweepConfig cfg{N, 0, n_s};
  if (adiabatic_evolve(cfg).fidelity >= target) return 0;
  auto fid = [&](double T) {
    cfg.T = T;
    return adiabatic_evolve(cfg).fidelity;
  };
  double lo = 0, hi = 0;
  for (double T = 5; T <= 100; T += 5) {
    if (fid(T) >= target) {
      hi = T;
      lo = T - 5;
      break;
    }
  }
  if (hi == 0) throw std::runtime_error("find_Tstar: no bracket below T=100");
  while (hi - lo > 1.0) {
    const double mid = (lo + hi) / 2;
    (fid(mid) >= target ? hi : lo) = mid;
  }
  return (lo + hi) / 2;
}

GapCurve gap_scan(int N, int points) {
  if (points < 2) throw std::invalid_argument("gap_scan: points >= 2");
  const SparseOp hx = restrict_boundary_zero(build_hx(N), N);
  const SparseOp hp = restrict_boundary_zero(build_hp(N), N);
  GapCurve curve;
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    const SparseOp h = (1 - f) * hx + f * hp;
    const auto eig = lowest_eigenvalues(h, 2);
    curve.s_over_t.push_back(f);
    curve.gap.push_back(eig[1] - eig[0]);
    if (curve.gap.back() < curve.gap[static_cast<std::size_t>(curve.min_index)])
      curve.min_index = i;
  }
  return curve;
}

double gap_extrapolate(const std::vector<int>& sizes) {
  if (sizes.size() < 3)
    throw std::invalid_argument("gap_extrapolate: need >= 3 sizes");
  Eigen::MatrixXd a(sizes.size(), 3);
  Eigen::VectorXd y(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const int N = sizes[i];
    const SparseOp hp = restrict_boundary_zero(build_hp(N), N);
    const auto eig = lowest_eigenvalues(hp, 2);
    const double x = 1.0 / N;
    a(static_cast<Eigen::Index>(i), 0) = 1;
    a(static_cast<Eigen::Index>(i), 1) = x;
    a(static_cast<Eigen::Index>(i), 2) = x * x;
    y[static_cast<Eigen::Index>(i)] = eig[1] - eig[0];
  }
  const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(y);
  return coef[0];
}

double revival_fidelity(int N, double xi, double delta, double j, double t) {
  const double z = z_norm(N, xi);
  cdouble acc = 0;
  double pw = 1;
  for (int k = 0; k <= N / 2 - 1; ++k) {
    const double pk = pw * static_cast<double>(count_constrained(N, k)) / z;
    acc += pk * std::polar(1.0, -scar_energy(N, k, delta, j) * t);
    pw *= xi * xi;
  }
  return std::abs(acc);
}

MzProjection project_magnetization(const Statevector& state, int k) {
  const int n = state.n_qubits;
  if (k < 0 || k > n)
    throw std::out_of_range("project_magnetization: bad sector");
  MzProjection res;
  res.state = state;
  double p = 0;
  for (std::int64_t x = 0; x < state.dim(); ++x) {
    int w = 0;
    for (int q = 0; q < n; ++q)
      w += bit_of(static_cast<std::uint64_t>(x), q, n);
    if (w == k)
      p += std::norm(state.amps[x]);
    else
      res.state.amps[x] = 0;
  }
  res.probability = p;
  if (p < 1e-14) {
    res.valid = false;
    return res;
  }
  res.state.amps /= std::sqrt(p);
  return res;
}

}  // namespace scarforge
