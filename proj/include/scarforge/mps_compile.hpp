#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scarforge/circuit.hpp"

namespace scarforge {

// Open-boundary real tensor train. amplitude(x) = L * M^(x_1) * ... * R;
// tensors are stored per site and may have unequal bond dimensions after
// canonicalization.
struct Mps {
  int m = 0;
  int chi = 0;
  std::vector<Eigen::MatrixXd> m0, m1;  // per-site matrices for bits 0 / 1
  Eigen::RowVectorXd L;
  Eigen::VectorXd R;
};

// Transition matrices of the automaton accepting weight-k strings with no
// adjacent 1s, over states (S0, A1, B1, ..., A_(k-1), B_(k-1), F_k).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> dfa_transition_matrices(int k);

// MPS whose unnormalized amplitudes are 1 on weight-k no-adjacent-1s
// strings of length m and 0 elsewhere.
Mps projected_dicke_mps(int m, int k);

double mps_amplitude(const Mps& mps, const std::string& bits);
Statevector mps_to_state(const Mps& mps);

struct IsometryBlock {
  std::vector<int> qubits;  // ascending; last entry is the emitted site
  Eigen::MatrixXcd u;
};

// Blocks in application order (last site's block first); applying them to
// |0...0> reproduces the normalized MPS state.
struct IsometryStaircase {
  int m = 0;
  std::vector<IsometryBlock> blocks;
};

IsometryStaircase compile_mps(const Mps& mps);

Circuit staircase_to_circuit(const IsometryStaircase& staircase);

// Reported depth scale m * k * ceil(log2 k)^2 with unit constant.
long long depth_estimate(int m, int k);

}  // namespace scarforge
