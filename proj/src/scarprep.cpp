#include "scarforge/scarprep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace scarforge {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

double kmax_theta(int N, int i) {
  return 2 * std::atan(std::sqrt(static_cast<double>(N / 2 - i)));
}

}  // namespace

int ansatz_angle_count(int N, int k) {
  const int sq = N % 2 == 0 ? N * N : N * N - 1;
  return sq / 4 - k * (k - 1) - 2;
}

AnsatzSpec build_ansatz(int N, int k) {
  if (k < 1 || N < 2 * k + 2)
    throw std::invalid_argument("build_ansatz: need N >= 2k + 2, k >= 1");
  AnsatzSpec spec;
  spec.N = N;
  spec.k = k;
  for (int top = 2 * k - 1; top <= N - 3; ++top) {
    std::vector<int> layer;
    for (int j = top; j >= 1; j -= 2) layer.push_back(j);
    spec.layers.push_back(std::move(layer));
  }
  std::vector<int> full;
  for (int j = N - 3; j >= 1; --j) full.push_back(j);
  spec.layers.push_back(std::move(full));
  for (const auto& layer : spec.layers)
    spec.n_angles += static_cast<int>(layer.size());
  if (spec.n_angles != ansatz_angle_count(N, k))
    throw std::logic_error("build_ansatz: parameter count mismatch");
  return spec;
}

Statevector ansatz_initial_state(int N, int k) {
  std::uint64_t idx = 0;
  for (int j = 0; j < k; ++j) idx |= std::uint64_t{1} << (N - 2 - 2 * j);
  return basis_state(N, idx);
}

Statevector apply_ansatz(const AnsatzSpec& spec,
                         const std::vector<double>& theta) {
  if (static_cast<int>(theta.size()) != spec.n_angles)
    throw std::invalid_argument("apply_ansatz: angle count mismatch");
  Statevector s = ansatz_initial_state(spec.N, spec.k);
  std::size_t t = 0;
  for (const auto& layer : spec.layers)
    for (int j : layer)
      apply_gate(s, Gate::dcxy(j - 1, j, j + 1, j + 2, theta[t++]));
  return s;
}

Circuit ansatz_circuit(const AnsatzSpec& spec,
                       const std::vector<double>& theta) {
  if (static_cast<int>(theta.size()) != spec.n_angles)
    throw std::invalid_argument("ansatz_circuit: angle count mismatch");
  const int N = spec.N;
  Circuit c;
  c.n_qubits = N - 2;
  std::size_t t = 0;
  for (const auto& layer : spec.layers)
    for (int j : layer) {
      const double a = theta[t++];
      if (j == 1)
        c.gates.push_back(Gate::cxy(2, 0, 1, a));
      else if (j == N - 3)
        c.gates.push_back(Gate::cxy(N - 5, N - 4, N - 3, a));
      else
        c.gates.push_back(Gate::dcxy(j - 2, j - 1, j, j + 1, a));
    }
  c.metadata["name"] = "scar-ansatz";
  c.metadata["N"] = std::to_string(N);
  c.metadata["k"] = std::to_string(spec.k);
  return c;
}

SectorAnsatz::SectorAnsatz(const AnsatzSpec& spec) {
  const int N = spec.N;
  const int k = spec.k;
  std::unordered_map<std::uint64_t, int> index;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << N); ++x) {
    if ((x >> (N - 1)) & 1u) continue;
    if (x & 1u) continue;
    if (x & (x >> 1)) continue;
    if (std::popcount(x) != k) continue;
    index.emplace(x, static_cast<int>(basis_.size()));
    basis_.push_back(x);
  }
  std::uint64_t init = 0;
  for (int j = 0; j < k; ++j) init |= std::uint64_t{1} << (N - 2 - 2 * j);
  initial_index_ = index.at(init);
  for (const auto& layer : spec.layers)
    for (int j : layer) {
      std::vector<std::pair<int, int>> p;
      // Window bits, most significant first: sites j, j+1, j+2, j+3 live at
      // shifts N-j, N-j-1, N-j-2, N-j-3.
      const int sh_c1 = N - j, sh_a = N - j - 1, sh_b = N - j - 2,
                sh_c2 = N - j - 3;
      for (int i = 0; i < dim(); ++i) {
        const std::uint64_t x = basis_[static_cast<std::size_t>(i)];
        if ((x >> sh_c1) & 1u || (x >> sh_c2) & 1u) continue;
        if ((x >> sh_a) & 1u || !((x >> sh_b) & 1u)) continue;
        const std::uint64_t y =
            (x ^ (std::uint64_t{1} << sh_b)) | (std::uint64_t{1} << sh_a);
        p.emplace_back(i, index.at(y));
      }
      pairs_.push_back(std::move(p));
    }
}

Eigen::VectorXd SectorAnsatz::evaluate(const std::vector<double>& theta) const {
  if (theta.size() != pairs_.size())
    throw std::invalid_argument("SectorAnsatz: angle count mismatch");
  Eigen::VectorXd psi = Eigen::VectorXd::Zero(dim());
  psi[initial_index_] = 1;
  for (std::size_t g = 0; g < pairs_.size(); ++g) {
    const double c = std::cos(theta[g]), s = std::sin(theta[g]);
    for (const auto& [i01, i10] : pairs_[g]) {
      const double a01 = psi[i01], a10 = psi[i10];
      psi[i01] = c * a01 - s * a10;
      psi[i10] = s * a01 + c * a10;
    }
  }
  return psi;
}

double SectorAnsatz::infidelity(const std::vector<double>& theta) const {
  const Eigen::VectorXd psi = evaluate(theta);
  const double ov = psi.sum() / std::sqrt(static_cast<double>(dim()));
  return 1 - ov * ov;
}

OptimizeResult optimize_ansatz(int N, int k, int restarts, std::uint64_t seed,
                               double target_infidelity) {
  if (restarts < 1) throw std::invalid_argument("optimize_ansatz: restarts");
  const AnsatzSpec spec = build_ansatz(N, k);
  const SectorAnsatz sector(spec);
  const int na = spec.n_angles;
  constexpr double h = 1e-6;

  OptimizeResult best;
  best.infidelity = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r));
    std::vector<double> theta(na);
    for (double& a : theta)
      a = kTwoPi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double f = sector.infidelity(theta);

    std::vector<double> grad(na), trial(na);
    double alpha = 0.25;
    int stall = 0;
    for (int iter = 0; iter < 5000 && f > target_infidelity; ++iter) {
      double gn2 = 0;
      for (int i = 0; i < na; ++i) {
        const double save = theta[i];
        theta[i] = save + h;
        const double fp = sector.infidelity(theta);
        theta[i] = save - h;
        const double fm = sector.infidelity(theta);
        theta[i] = save;
        grad[i] = (fp - fm) / (2 * h);
        gn2 += grad[i] * grad[i];
      }
      if (gn2 < 1e-24) break;
      alpha = std::min(alpha * 2, 1.0);
      double ft = f;
      bool accepted = false;
      for (int ls = 0; ls < 60; ++ls) {
        for (int i = 0; i < na; ++i)
          trial[i] = wrap_angle(theta[i] - alpha * grad[i]);
        ft = sector.infidelity(trial);
        if (ft <= f - 1e-4 * alpha * gn2) {
          accepted = true;
          break;
        }
        alpha /= 2;
      }
      if (!accepted) break;
      stall = ft > f - 1e-3 * f ? stall + 1 : 0;
      theta.swap(trial);
      f = ft;
      if (stall > 40 && f > 1e-7) break;
    }

    best.restart_infidelities.push_back(f);
    if (f < best.infidelity) {
      best.infidelity = f;
      best.theta = theta;
      best.best_restart = r;
    }
    if (best.infidelity < target_infidelity) break;
  }
  return best;
}

Circuit kmax_circuit(int N) {
  if (N < 6 || N % 2)
    throw std::invalid_argument("kmax_circuit: N must be even, >= 6");
  const int kmax = N / 2 - 1;
  Circuit c;
  c.n_qubits = N;
  c.gates.push_back(Gate::ry(1, kmax_theta(N, 1)));
  for (int i = 1; i < kmax; ++i)
    c.gates.push_back(Gate::cry1(2 * i - 1, 2 * i + 1, kmax_theta(N, i + 1)));
  for (int site = 2; site <= N - 2; site += 2)
    c.gates.push_back(Gate::c0not(site - 1, site));
  c.metadata["name"] = "kmax";
  c.metadata["N"] = std::to_string(N);
  return c;
}

Circuit kmax_compressed_circuit(int N) {
  if (N < 6 || N % 2)
    throw std::invalid_argument("kmax_compressed_circuit: N even, >= 6");
  const int kmax = N / 2 - 1;
  Circuit c;
  c.n_qubits = kmax;
  c.gates.push_back(Gate::ry(0, kmax_theta(N, 1)));
  for (int i = 1; i < kmax; ++i)
    c.gates.push_back(Gate::cry1(i - 1, i, kmax_theta(N, i + 1)));
  c.metadata["name"] = "kmax-compressed";
  c.metadata["N"] = std::to_string(N);
  return c;
}

CompressedPauli encode_pauli_pair(char p_even, char p_odd) {
  auto diagonal = [](char p) { return p == 'I' || p == 'Z'; };
  if (diagonal(p_even) != diagonal(p_odd)) return {0, 'I'};
  if (diagonal(p_even)) {
    if (p_even == 'I' && p_odd == 'I') return {1, 'I'};
    if (p_even == 'Z' && p_odd == 'I') return {1, 'Z'};
    if (p_even == 'I' && p_odd == 'Z') return {-1, 'Z'};
    return {-1, 'I'};  // Z Z
  }
  if (p_even == 'X' && p_odd == 'X') return {1, 'X'};
  if (p_even == 'X' && p_odd == 'Y') return {-1, 'Y'};
  if (p_even == 'Y' && p_odd == 'X') return {1, 'Y'};
  return {1, 'X'};  // Y Y
}

bool compressed_fib_projection(const std::string& bits) {
  return bits.find("01") == std::string::npos;
}

Statevector decode_compressed(const Statevector& compressed) {
  const int kmax = compressed.n_qubits;
  const int N = 2 * (kmax + 1);
  Statevector out = zero_state(N);
  out.amps[0] = 0;
  for (std::int64_t y = 0; y < compressed.dim(); ++y) {
    std::uint64_t full = 0;
    for (int i = 0; i < kmax; ++i) {
      const int b = bit_of(static_cast<std::uint64_t>(y), i, kmax);
      if (b)
        full |= std::uint64_t{1} << (N - 1 - (2 * i + 1));
      else
        full |= std::uint64_t{1} << (N - 1 - (2 * i + 2));
    }
    out.amps[static_cast<std::int64_t>(full)] = compressed.amps[y];
  }
  return out;
}

}  // namespace scarforge
