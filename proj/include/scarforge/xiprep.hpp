#pragma once

#include <utility>
#include <vector>

#include "scarforge/circuit.hpp"

namespace scarforge {

// Rotation angles for the linear preparation circuit on an m-qubit block.
// phi is evaluated from the top index down: phi[m] = 1,
// phi[j-1] = sqrt(1 + (x_j / phi[j])^2) with x_j = xi (tilde) or
// x_j = (-1)^(j+1) xi (signed), and tan(theta_j / 2) = x_j / phi[j].
struct AngleSchedule {
  int m = 0;
  double xi = 0;
  bool tilde = true;
  std::vector<double> theta;  // theta[j-1] = theta_j, j = 1..m
  std::vector<double> phi;    // phi[j-1] = phi_j, j = 1..m+1
};

AngleSchedule angle_schedule(int m, double xi, bool tilde);

// [RY(theta_1, q0), CRY0(q0 -> q1, theta_2), ..., CRY0(q_(m-2) -> q_(m-1),
// theta_m)]; prepares xi_inner_state(m, xi, tilde) from |0...0>.
Circuit build_linear_circuit(int m, double xi, bool tilde);

// Fibonacci closed form at xi = 1: theta_(m-i+1) = 2 atan(sqrt(F_i/F_(i+1))).
std::vector<double> closed_form_angles_xi1(int m);

struct StitchPlan {
  int k_blocks = 1;
  int m = 1;
  double xi = 1;

  int ancilla_count() const { return k_blocks - 1; }
  int total_qubits() const { return k_blocks * m + k_blocks - 1; }
};

// Per-block linear circuits on qubits [b*m, (b+1)*m), then one Toffoli per
// junction targeting ancilla k_blocks*m + j with controls on the junction
// qubits. Postselecting every ancilla on 0 leaves xi_inner_state(k*m, xi)
// on the primary register. tilde = false appends the sign-fixing Z layer.
Circuit build_stitch_circuit(const StitchPlan& plan, bool tilde = true);

struct PostselectResult {
  Statevector state;       // primary register only, ancillas removed
  double probability = 0;  // joint probability of all ancillas reading 0
  bool valid = true;
};

// Projects qubits n_primary..n-1 onto |0> and drops them.
PostselectResult postselect_ancillas(const Statevector& state, int n_primary);

struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / den; }
};

// Success probability F(k*m+2) / F(m+2)^k at xi = 1, in lowest terms.
Rational success_probability_closed(int m, int k);

// Squared norm of the constraint-projected k-fold tensor power of the
// xi block state; agrees with the closed form at xi = 1.
double success_probability_exact(int m, int k, double xi);

}  // namespace scarforge
