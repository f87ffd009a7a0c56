#include <doctest.h>

#include <cmath>

#include "scarforge/hamiltonians.hpp"
#include "scarforge/metrics.hpp"
#include "scarforge/refstates.hpp"
#include "scarforge/scarprep.hpp"

using namespace scarforge;

TEST_CASE("ansatz layer structure and parameter count") {
  const AnsatzSpec s = build_ansatz(8, 2);
  REQUIRE(s.layers.size() == 4);
  CHECK(s.layers[0] == std::vector<int>{3, 1});
  CHECK(s.layers[1] == std::vector<int>{4, 2});
  CHECK(s.layers[2] == std::vector<int>{5, 3, 1});
  CHECK(s.layers[3] == std::vector<int>{5, 4, 3, 2, 1});
  CHECK(s.n_angles == 12);

  CHECK(ansatz_angle_count(14, 5) == 27);
  CHECK(ansatz_angle_count(15, 6) == 24);
  CHECK(ansatz_angle_count(14, 6) == 17);
  CHECK(ansatz_angle_count(13, 5) == 20);
  CHECK(ansatz_angle_count(16, 7) == 20);
  for (int N = 4; N <= 16; ++N)
    for (int k = 1; 2 * k + 2 <= N; ++k)
      CHECK(build_ansatz(N, k).n_angles == ansatz_angle_count(N, k));
  CHECK_THROWS(build_ansatz(8, 4));
}

TEST_CASE("ansatz conserves weight and the adjacency constraint") {
  const AnsatzSpec spec = build_ansatz(10, 3);
  std::vector<double> theta(spec.n_angles);
  for (int i = 0; i < spec.n_angles; ++i) theta[i] = 0.1 + 0.37 * i;

  const Statevector zero_angles =
      apply_ansatz(spec, std::vector<double>(spec.n_angles, 0.0));
  CHECK((zero_angles.amps - ansatz_initial_state(10, 3).amps).norm() < 1e-14);

  const Statevector out = apply_ansatz(spec, theta);
  CHECK(out.norm() == doctest::Approx(1).epsilon(1e-12));
  CHECK(apply_fib_projector(out, 0, 9).second == doctest::Approx(1));
  double weight = 0;
  for (std::int64_t x = 0; x < out.dim(); ++x) {
    int w = 0;
    for (int q = 0; q < 10; ++q)
      w += bit_of(static_cast<std::uint64_t>(x), q, 10);
    weight += w * std::norm(out.amps[x]);
  }
  CHECK(weight == doctest::Approx(3).epsilon(1e-12));
}

TEST_CASE("sector evaluator matches the full-register simulation") {
  const AnsatzSpec spec = build_ansatz(9, 2);
  const SectorAnsatz sector(spec);
  std::vector<double> theta(spec.n_angles);
  for (int i = 0; i < spec.n_angles; ++i) theta[i] = 0.05 * (i + 1);
  const Eigen::VectorXd psi = sector.evaluate(theta);
  const Statevector full = apply_ansatz(spec, theta);
  for (int i = 0; i < sector.dim(); ++i)
    CHECK(psi[i] == doctest::Approx(
                        full.amps[static_cast<std::int64_t>(sector.basis()[i])]
                            .real())
                        .epsilon(1e-12));
  const Statevector target =
      tilde_transform(scar_state(9, 2));
  CHECK(sector.infidelity(theta) ==
        doctest::Approx(1 - fidelity(full, target)).epsilon(1e-10));
}

TEST_CASE("reduced-register circuit agrees with the full evaluation") {
  const AnsatzSpec spec = build_ansatz(7, 2);
  std::vector<double> theta(spec.n_angles);
  for (int i = 0; i < spec.n_angles; ++i) theta[i] = 0.3 + 0.21 * i;
  const Circuit c = ansatz_circuit(spec, theta);
  Statevector init = zero_state(5);
  init.amps.setZero();
  // Inner register of the padded initial state.
  init.amps[index_of_string("10100")] = 1;
  const Statevector inner = simulate(c, init);
  const Statevector full = apply_ansatz(spec, theta);
  double diff = 0;
  for (std::int64_t x = 0; x < inner.dim(); ++x)
    diff += std::norm(full.amps[x << 1] - inner.amps[x]);
  CHECK(std::sqrt(diff) < 1e-12);

  const GateCounts gc = gate_counts(c);
  CHECK(gc.cnot_equivalent == 72);
}

TEST_CASE("optimizer reaches machine-precision minima on small towers") {
  const OptimizeResult res = optimize_ansatz(8, 2, 50, 1);
  CHECK(res.infidelity < 1e-10);
  const OptimizeResult res2 = optimize_ansatz(8, 2, 50, 1);
  CHECK(res.infidelity == res2.infidelity);
  CHECK(res.theta == res2.theta);

  // The optimized angles really produce the tower state.
  const AnsatzSpec spec = build_ansatz(8, 2);
  const Statevector out = apply_ansatz(spec, res.theta);
  CHECK(fidelity(out, tilde_transform(scar_state(8, 2))) >= 1 - 1e-8);
}

TEST_CASE("top-of-tower circuit") {
  const Circuit c6 = kmax_circuit(6);
  const Statevector got = simulate(c6);
  const double a = 1 / std::sqrt(3.0);
  CHECK(got.amps[index_of_string("001010")].real() == doctest::Approx(a));
  CHECK(got.amps[index_of_string("010010")].real() == doctest::Approx(a));
  CHECK(got.amps[index_of_string("010100")].real() == doctest::Approx(a));

  for (int N : {6, 8, 10, 12, 14}) {
    const Circuit c = kmax_circuit(N);
    CHECK(gate_counts(c).two_qubit_gates == N - 3);
    const Statevector out = tilde_transform(simulate(c));
    CHECK(fidelity(out, scar_state(N, N / 2 - 1)) >= 1 - 1e-10);
  }
  CHECK_THROWS(kmax_circuit(7));

  const Statevector s14 = simulate(kmax_circuit(14));
  int support = 0;
  for (std::int64_t x = 0; x < s14.dim(); ++x)
    if (std::abs(s14.amps[x]) > 1e-12) {
      ++support;
      CHECK(std::abs(s14.amps[x]) ==
            doctest::Approx(1 / std::sqrt(7.0)).epsilon(1e-10));
    }
  CHECK(support == 7);
}

TEST_CASE("compressed cascade decodes to the full circuit output") {
  for (int N : {6, 8, 10, 12, 14}) {
    const Statevector comp = simulate(kmax_compressed_circuit(N));
    const Statevector full = simulate(kmax_circuit(N));
    CHECK((decode_compressed(comp).amps - full.amps).norm() < 1e-12);
  }
}

TEST_CASE("pair-encoding rules for operators") {
  CHECK(encode_pauli_pair('Z', 'Z').coeff == -1);
  CHECK(encode_pauli_pair('Z', 'Z').pauli == 'I');
  CHECK(encode_pauli_pair('Z', 'I').coeff == 1);
  CHECK(encode_pauli_pair('Z', 'I').pauli == 'Z');
  CHECK(encode_pauli_pair('I', 'Z').coeff == -1);
  CHECK(encode_pauli_pair('I', 'Z').pauli == 'Z');
  CHECK(encode_pauli_pair('X', 'Y').coeff == -1);
  CHECK(encode_pauli_pair('X', 'Y').pauli == 'Y');
  CHECK(encode_pauli_pair('Y', 'Y').pauli == 'X');
  CHECK(encode_pauli_pair('X', 'Z').coeff == 0);
  CHECK(encode_pauli_pair('I', 'X').coeff == 0);

  // Every rule agrees with conjugation by the explicit pair decoding, N = 6.
  const int N = 6, kmax = 2;
  const char labels[] = {'I', 'X', 'Y', 'Z'};
  for (int site_pair = 0; site_pair < kmax; ++site_pair)
    for (char pe : labels)
      for (char po : labels) {
        const CompressedPauli enc = encode_pauli_pair(pe, po);
        for (std::int64_t u = 0; u < (1 << kmax); ++u)
          for (std::int64_t v = 0; v < (1 << kmax); ++v) {
            const Statevector du = decode_compressed(basis_state(kmax, u));
            Statevector dv = decode_compressed(basis_state(kmax, v));
            std::vector<OpTerm> term = {
                {1,
                 {{2 * site_pair + 2, pauli_matrix(pe)},
                  {2 * site_pair + 3, pauli_matrix(po)}}}};
            const cdouble lhs =
                inner_product(du, matvec(op_from_terms(N, term), dv));
            std::vector<OpTerm> cterm = {
                {enc.coeff, {{site_pair + 1, pauli_matrix(enc.pauli)}}}};
            const cdouble rhs = inner_product(
                basis_state(kmax, u),
                matvec(op_from_terms(kmax, cterm), basis_state(kmax, v)));
            CHECK(std::abs(lhs - rhs) < 1e-12);
          }
      }
}

TEST_CASE("compressed constraint rule") {
  CHECK(compressed_fib_projection("10"));
  CHECK_FALSE(compressed_fib_projection("01"));
  CHECK(compressed_fib_projection("1100"));
  CHECK(compressed_fib_projection(""));
  CHECK_FALSE(compressed_fib_projection("1101"));
  // Monotone strings 1^a 0^b always pass.
  for (int a = 0; a <= 4; ++a)
    CHECK(compressed_fib_projection(std::string(a, '1') +
                                    std::string(4 - a, '0')));
}

TEST_CASE("compressed energy witness hits its ideal value") {
  for (int N = 6; N <= 14; N += 2) {
    const Statevector comp = simulate(kmax_compressed_circuit(N));
    CHECK(expectation(build_hj_compressed(N), comp) ==
          doctest::Approx(-(N - 3)).epsilon(1e-10));
  }
}
