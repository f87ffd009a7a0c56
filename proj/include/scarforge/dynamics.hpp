#pragma once

#include <vector>

#include "scarforge/hamiltonians.hpp"
#include "scarforge/statevector.hpp"

namespace scarforge {

// Stepwise sweep from the paramagnet ground state to the constrained target,
// carried out in the zero-boundary-qubit subspace (both endpoints conserve
// the boundary Z's, and the full-space spectrum is boundary-degenerate).
struct SweepConfig {
  int N = 4;
  double T = 0;
  int n_s = 1000;
};

struct SweepResult {
  Eigen::VectorXcd reduced_state;  // over the 2^(N-2) inner space
  double fidelity = 0;             // |<psi(T)|target>|
};

SweepResult adiabatic_evolve(const SweepConfig& config);

// Smallest T (to within +-0.5) whose sweep fidelity reaches the target.
double find_Tstar(int N, double target = 0.99, int n_s = 1000);

struct GapCurve {
  std::vector<double> s_over_t;
  std::vector<double> gap;
  int min_index = 0;
};

GapCurve gap_scan(int N, int points);

// Quadratic least-squares fit of the endpoint gap against 1/N; returns the
// 1/N -> 0 intercept.
double gap_extrapolate(const std::vector<int>& sizes);

// |<xi| exp(-i H t) |xi>| from the exact tower decomposition.
double revival_fidelity(int N, double xi, double delta, double j, double t);

struct MzProjection {
  Statevector state;
  double probability = 0;
  bool valid = true;
};

// Projects onto the magnetization sector with k up-spins flipped
// (Hamming weight k) and renormalizes.
MzProjection project_magnetization(const Statevector& state, int k);

}  // namespace scarforge
