#include "scarforge/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace scarforge {

std::string bitstring_of(std::uint64_t index, int n_qubits) {
  std::string s(n_qubits, '0');
  for (int q = 0; q < n_qubits; ++q)
    if (bit_of(index, q, n_qubits)) s[q] = '1';
  return s;
}

std::uint64_t index_of_string(const std::string& bits) {
  std::uint64_t x = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad bitstring");
    x = (x << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return x;
}

Statevector zero_state(int n) { return basis_state(n, 0); }

Statevector basis_state(int n, std::uint64_t index) {
  if (n < 1 || n > kMaxQubits)
    throw std::out_of_range("qubit count out of supported range [1, 24]");
  Statevector s;
  s.n_qubits = n;
  s.amps = Eigen::VectorXcd::Zero(std::int64_t{1} << n);
  if (index >= static_cast<std::uint64_t>(s.dim()))
    throw std::out_of_range("basis index out of range");
  s.amps[static_cast<std::int64_t>(index)] = 1.0;
  return s;
}

cdouble inner_product(const Statevector& a, const Statevector& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("inner_product: dimension mismatch");
  return a.amps.dot(b.amps);  // Eigen conjugates the left argument
}

void apply_unitary(Statevector& state, std::span<const int> qubits,
                   const Eigen::MatrixXcd& u) {
  const int n = state.n_qubits;
  const int w = static_cast<int>(qubits.size());
  if (w < 1 || w > n) throw std::invalid_argument("gate error: bad window");
  if (u.rows() != (1 << w) || u.cols() != (1 << w))
    throw std::invalid_argument("gate error: matrix size mismatch");
  std::uint64_t seen = 0;
  for (int q : qubits) {
    if (q < 0 || q >= n) throw std::invalid_argument("gate error: qubit out of range");
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (seen & bit) throw std::invalid_argument("gate error: duplicate qubit");
    seen |= bit;
  }

  // Bit positions (from the least significant end) of the window qubits,
  // with qubits[0] the most significant window bit.
  std::vector<int> pos(w);
  for (int t = 0; t < w; ++t) pos[t] = n - 1 - qubits[t];
  std::vector<int> rest_pos;
  for (int p = 0; p < n; ++p)
    if (std::find(pos.begin(), pos.end(), p) == pos.end()) rest_pos.push_back(p);

  const std::int64_t outer = std::int64_t{1} << (n - w);
  const int dim_w = 1 << w;
  Eigen::VectorXcd in(dim_w), out(dim_w);
  for (std::int64_t o = 0; o < outer; ++o) {
    std::uint64_t base = 0;
    for (int t = 0; t < n - w; ++t)
      base |= ((static_cast<std::uint64_t>(o) >> t) & 1u) << rest_pos[t];
    for (int r = 0; r < dim_w; ++r) {
      std::uint64_t idx = base;
      for (int t = 0; t < w; ++t)
        idx |= (static_cast<std::uint64_t>(r) >> (w - 1 - t) & 1u) << pos[t];
      in[r] = state.amps[static_cast<std::int64_t>(idx)];
    }
    out.noalias() = u * in;
    for (int r = 0; r < dim_w; ++r) {
      std::uint64_t idx = base;
      for (int t = 0; t < w; ++t)
        idx |= (static_cast<std::uint64_t>(r) >> (w - 1 - t) & 1u) << pos[t];
      state.amps[static_cast<std::int64_t>(idx)] = out[r];
    }
  }
}

ProjectionResult project_qubit(const Statevector& state, int qubit, int value) {
  if (qubit < 0 || qubit >= state.n_qubits)
    throw std::out_of_range("project_qubit: qubit out of range");
  ProjectionResult res;
  res.state.n_qubits = state.n_qubits;
  res.state.amps = state.amps;
  double p = 0;
  for (std::int64_t x = 0; x < state.dim(); ++x) {
    if (bit_of(static_cast<std::uint64_t>(x), qubit, state.n_qubits) == value)
      p += std::norm(state.amps[x]);
    else
      res.state.amps[x] = 0.0;
  }
  res.probability = p;
  if (p < 1e-14) {
    res.valid = false;
    return res;
  }
  res.state.amps /= std::sqrt(p);
  return res;
}

std::map<std::uint64_t, double> probabilities(const Statevector& state) {
  std::map<std::uint64_t, double> out;
  for (std::int64_t x = 0; x < state.dim(); ++x) {
    const double p = std::norm(state.amps[x]);
    if (p > 1e-15) out[static_cast<std::uint64_t>(x)] = p;
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> sample(const Statevector& state,
                                              std::uint64_t shots,
                                              std::uint64_t seed) {
  auto probs = probabilities(state);
  std::vector<std::uint64_t> keys;
  std::vector<double> cdf;
  keys.reserve(probs.size());
  cdf.reserve(probs.size());
  double acc = 0;
  for (auto& [k, p] : probs) {
    acc += p;
    keys.push_back(k);
    cdf.push_back(acc);
  }
  std::map<std::uint64_t, std::uint64_t> counts;
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < shots; ++i) {
    // 53-bit uniform in [0,1); kept explicit so results are portable.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    auto it = std::lower_bound(cdf.begin(), cdf.end(), u * acc);
    if (it == cdf.end()) --it;
    ++counts[keys[static_cast<std::size_t>(it - cdf.begin())]];
  }
  return counts;
}

double entanglement_entropy(const Statevector& state, int cut) {
  const int n = state.n_qubits;
  if (cut < 1 || cut > n - 1) throw std::out_of_range("entropy cut out of range");
  const std::int64_t rows = std::int64_t{1} << cut;
  const std::int64_t cols = std::int64_t{1} << (n - cut);
  using RowMat =
      Eigen::Matrix<cdouble, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMat> psi(state.amps.data(), rows, cols);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(psi);
  double s = 0;
  for (double sv : svd.singularValues()) {
    const double lambda = sv * sv;
    if (lambda > 1e-14) s -= lambda * std::log(lambda);
  }
  return s;
}

}  // namespace scarforge
