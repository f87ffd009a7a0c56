#pragma once

#include <utility>

#include "scarforge/statevector.hpp"

namespace scarforge {

// Fibonacci numbers with F(1) = F(2) = 1.
long long fibonacci(int n);
long long binomial(int n, int k);

// Number of length-N strings with no adjacent 1s, zero boundary bits, and
// exactly k ones: binomial(N - k - 1, k).
long long count_constrained(int N, int k);

// Dimension of the m-qubit no-adjacent-1s space, F(m + 2).
long long fib_dim(int m);

// Normalization Z = sum_k |xi|^(2k) * count_constrained(N, k).
double z_norm(int N, cdouble xi);

// N-qubit superposition with amplitude on each constrained string
// proportional to (prod of (-1)^site over its 1s, sites 1-based) * xi^weight.
Statevector xi_state(int N, cdouble xi);

// The m-qubit inner register of xi_state with the boundary zeros stripped.
// tilde = true drops the alternating signs (all amplitudes >= 0 for xi >= 0).
Statevector xi_inner_state(int m, cdouble xi, bool tilde);

// k-th tower state built by k applications of the sparse raising operator
// sum_i (-1)^i P_(i-1) sigma+_i P_(i+1) to |0...0>, then normalized by
// 1 / (k! sqrt(count_constrained(N, k))).
Statevector scar_state(int N, int k);

// Equal superposition of all weight-k strings of length m.
Statevector dicke(int m, int k);

// Equal superposition of weight-k strings of length m with no adjacent 1s.
Statevector projected_dicke(int m, int k);

// Zeroes every amplitude whose bitstring has "11" somewhere inside
// [first, last]; returns the surviving squared norm. Not renormalized.
std::pair<Statevector, double> apply_fib_projector(const Statevector& state,
                                                   int first, int last);

// Z on odd 1-based sites, i.e. artifact qubits 0, 2, 4, ...
Statevector tilde_transform(const Statevector& state);

}  // namespace scarforge
