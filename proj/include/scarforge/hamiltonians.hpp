#pragma once

#include <vector>

#include <Eigen/SparseCore>

#include "scarforge/statevector.hpp"

namespace scarforge {

using SparseOp = Eigen::SparseMatrix<cdouble>;

// One factor of a product term, acting on a 1-based site.
struct SiteFactor {
  int site = 1;
  Eigen::Matrix2cd op;
};

struct OpTerm {
  cdouble coeff = 1;
  std::vector<SiteFactor> factors;  // identity on unlisted sites
};

// Shared assembly kernel; every Hamiltonian below goes through it.
SparseOp op_from_terms(int N, const std::vector<OpTerm>& terms);

Eigen::Matrix2cd pauli_matrix(char p);

// lambda * sum_i (X_i - Z_(i-1) X_i Z_(i+1)) over inner sites, plus
// delta * sum Z_i and j * sum Z_i Z_(i+1).
SparseOp build_h0(int N, double lambda, double delta, double j);

// Parent Hamiltonian sum_i P_(i-1) (P'_i / xi + xi P_i - (-1)^i X_i) P_(i+1).
SparseOp build_hxi(int N, double xi);

// Paramagnet sum_i (I - (-1)^i X_i) / 2 over inner sites.
SparseOp build_hx(int N);

// Constrained target sum_i (P'_(i-1) P'_i + P'_i P'_(i+1)
//                           + P_(i-1) (I - (-1)^i X_i)/2 P_(i+1)).
SparseOp build_hp(int N);

// (1 - s/T) hx + (s/T) hp.
SparseOp build_hs(int N, double s, double T);

// Compressed-register Hamiltonian Z_first - Z_last - (N/2 - 1)
// - sum of nearest-neighbor ZZ, on N/2 - 1 qubits.
SparseOp build_hj_compressed(int N);

// Tower energy delta*N + j*(N-1) - (2*delta + 4*j)*k.
double scar_energy(int N, int k, double delta, double j);

double expectation(const SparseOp& op, const Statevector& state);
Statevector matvec(const SparseOp& op, const Statevector& state);

// Restriction to the subspace with the first and last qubit in |0>;
// valid for operators commuting with both boundary Z's.
SparseOp restrict_boundary_zero(const SparseOp& op, int N);

// Smallest `count` eigenvalues, ascending. Dense solve for dim <= 1024,
// Lanczos with full reorthogonalization above.
std::vector<double> lowest_eigenvalues(const SparseOp& op, int count);

// Ground state of build_hx restricted to zero boundary qubits, as a vector
// over the reduced 2^(N-2)-dimensional space.
Eigen::VectorXcd hx_ground_reduced(int N);

}  // namespace scarforge
