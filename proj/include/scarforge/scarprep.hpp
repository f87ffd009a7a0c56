#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scarforge/circuit.hpp"

namespace scarforge {

// Staircase ansatz over the weight-k constrained sector. Gate start index j
// (1-based) means a pair rotation on sites (j+1, j+2) gated on sites j and
// j+3 being 0; layers list start indices in application order.
struct AnsatzSpec {
  int N = 0;
  int k = 0;
  std::vector<std::vector<int>> layers;
  int n_angles = 0;
};

// Closed-form parameter count: N^2/4 - k(k-1) - 2 for even N,
// (N^2-1)/4 - k(k-1) - 2 for odd N.
int ansatz_angle_count(int N, int k);

// Alternating-parity staircases with top index 2k-1, 2k, ..., N-3, then one
// full staircase; indices decrease within each layer. Throws if the gate
// count disagrees with ansatz_angle_count.
AnsatzSpec build_ansatz(int N, int k);

// |01> repeated k times, then zeros.
Statevector ansatz_initial_state(int N, int k);

// Full-register forward evaluation with four-qubit pair-rotation gates.
Statevector apply_ansatz(const AnsatzSpec& spec,
                         const std::vector<double>& theta);

// The same circuit on the inner N-2 qubits, with the boundary controls of
// the edge gates dropped (three-qubit gates at the ends).
Circuit ansatz_circuit(const AnsatzSpec& spec, const std::vector<double>& theta);

// Fast objective evaluation restricted to the constrained weight-k basis;
// amplitudes stay real throughout.
class SectorAnsatz {
 public:
  explicit SectorAnsatz(const AnsatzSpec& spec);

  int dim() const { return static_cast<int>(basis_.size()); }
  int n_angles() const { return static_cast<int>(pairs_.size()); }

  Eigen::VectorXd evaluate(const std::vector<double>& theta) const;
  // 1 - |<uniform|psi(theta)>|^2, the distance to the equal-sign tower state.
  double infidelity(const std::vector<double>& theta) const;

  const std::vector<std::uint64_t>& basis() const { return basis_; }

 private:
  int initial_index_ = 0;
  std::vector<std::uint64_t> basis_;
  std::vector<std::vector<std::pair<int, int>>> pairs_;  // (idx01, idx10)
};

struct OptimizeResult {
  std::vector<double> theta;
  double infidelity = 1;
  int best_restart = -1;
  std::vector<double> restart_infidelities;
};

// Random-restart local descent: central finite-difference gradients with
// backtracking line search, angles kept in [0, 2pi). Restart r uses seed
// seed + r, so results are reproducible and restart-order independent.
OptimizeResult optimize_ansatz(int N, int k, int restarts, std::uint64_t seed,
                               double target_infidelity = 1e-12);

// Rotation cascade over even sites plus a 0-controlled NOT layer; prepares
// the equal-sign top-of-tower state with N - 3 two-qubit gates.
Circuit kmax_circuit(int N);

// The cascade alone on N/2 - 1 qubits (compressed pair encoding).
Circuit kmax_compressed_circuit(int N);

struct CompressedPauli {
  double coeff = 0;
  char pauli = 'I';  // one of I, X, Y, Z on the compressed qubit
};

// Projection of a Pauli pair on sites (2i, 2i+1) onto the compressed qubit i.
CompressedPauli encode_pauli_pair(char p_even, char p_odd);

// True iff the compressed string has no "01" adjacent pair.
bool compressed_fib_projection(const std::string& bits);

// Expands compressed bit b at position i to bits (b, 1-b) on sites
// (2i+2, 2i+3) of an N-qubit register with zero boundary sites.
Statevector decode_compressed(const Statevector& compressed);

}  // namespace scarforge
