#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace scarforge {

using cdouble = std::complex<double>;

// Dense amplitude vector over n qubits. Qubit 0 is the most significant bit
// of the basis index, so a bitstring printed left to right lists qubits
// 0..n-1 in order.
struct Statevector {
  int n_qubits = 0;
  Eigen::VectorXcd amps;

  std::int64_t dim() const { return amps.size(); }
  double norm() const { return amps.norm(); }
};

inline constexpr int kMaxQubits = 24;

// Basis index of a bitstring given per-qubit bits (qubit 0 first).
inline std::uint64_t index_of_bits(std::span<const int> bits) {
  std::uint64_t x = 0;
  for (int b : bits) x = (x << 1) | static_cast<std::uint64_t>(b & 1);
  return x;
}

inline int bit_of(std::uint64_t index, int qubit, int n_qubits) {
  return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1u);
}

std::string bitstring_of(std::uint64_t index, int n_qubits);
std::uint64_t index_of_string(const std::string& bits);

Statevector zero_state(int n);
Statevector basis_state(int n, std::uint64_t index);

cdouble inner_product(const Statevector& a, const Statevector& b);

// Applies a dense unitary on the listed qubits (identity elsewhere).
// The matrix is indexed with qubits[0] as the most significant window bit.
void apply_unitary(Statevector& state, std::span<const int> qubits,
                   const Eigen::MatrixXcd& u);

struct ProjectionResult {
  Statevector state;       // renormalized post-measurement state
  double probability = 0;  // Born probability of the requested outcome
  bool valid = true;       // false when the outcome has ~zero probability
};

ProjectionResult project_qubit(const Statevector& state, int qubit, int value);

// |a_x|^2 for every basis index with weight above 1e-15.
std::map<std::uint64_t, double> probabilities(const Statevector& state);

std::map<std::uint64_t, std::uint64_t> sample(const Statevector& state,
                                              std::uint64_t shots,
                                              std::uint64_t seed);

// Von Neumann entropy (nats) of the reduced state on qubits 0..cut-1.
double entanglement_entropy(const Statevector& state, int cut);

}  // namespace scarforge
