#include <doctest.h>

#include <cmath>

#include "scarforge/refstates.hpp"
#include "scarforge/statevector.hpp"

using namespace scarforge;

TEST_CASE("zero_state puts all weight on index 0") {
  for (int n : {1, 2, 4}) {
    const Statevector s = zero_state(n);
    CHECK(s.dim() == (1 << n));
    CHECK(s.amps[0] == cdouble(1));
    CHECK(s.norm() == doctest::Approx(1));
  }
  CHECK_THROWS_AS(zero_state(0), std::out_of_range);
  CHECK_THROWS_AS(zero_state(25), std::out_of_range);
}

TEST_CASE("bit order: qubit 0 is the most significant bit") {
  CHECK(index_of_string("0110") == 6);
  CHECK(bitstring_of(6, 4) == "0110");
  CHECK(bit_of(6, 1, 4) == 1);
  CHECK(bit_of(6, 3, 4) == 0);
}

TEST_CASE("inner products") {
  const Statevector z = zero_state(1);
  const Statevector o = basis_state(1, 1);
  Statevector plus = z;
  plus.amps << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  CHECK(inner_product(z, z) == cdouble(1));
  CHECK(inner_product(z, o) == cdouble(0));
  CHECK(inner_product(plus, z).real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK_THROWS(inner_product(z, zero_state(2)));
}

TEST_CASE("apply_unitary acts on the named window only") {
  Statevector s = zero_state(3);
  Eigen::MatrixXcd x(2, 2);
  x << 0, 1, 1, 0;
  std::vector<int> q = {1};
  apply_unitary(s, q, x);
  CHECK(std::abs(s.amps[index_of_string("010")] - cdouble(1)) < 1e-15);
  std::vector<int> bad = {1, 1};
  CHECK_THROWS(apply_unitary(s, bad, Eigen::MatrixXcd::Identity(4, 4)));
  std::vector<int> oob = {3};
  CHECK_THROWS(apply_unitary(s, oob, x));
}

TEST_CASE("apply_unitary window order: first listed qubit is most significant") {
  // CNOT matrix with control = first listed qubit.
  Eigen::MatrixXcd cn = Eigen::MatrixXcd::Zero(4, 4);
  cn(0, 0) = cn(1, 1) = cn(2, 3) = cn(3, 2) = 1;
  Statevector s = basis_state(3, index_of_string("001"));
  std::vector<int> q = {2, 0};
  apply_unitary(s, q, cn);
  CHECK(std::abs(s.amps[index_of_string("101")] - cdouble(1)) < 1e-15);
}

TEST_CASE("projection probabilities and invalid branch") {
  Statevector plus = zero_state(1);
  plus.amps << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const ProjectionResult p1 = project_qubit(plus, 0, 1);
  CHECK(p1.valid);
  CHECK(p1.probability == doctest::Approx(0.5));
  CHECK(std::abs(p1.state.amps[1] - cdouble(1)) < 1e-12);

  const ProjectionResult p0 = project_qubit(zero_state(2), 0, 0);
  CHECK(p0.probability == doctest::Approx(1));
  const ProjectionResult imp = project_qubit(zero_state(2), 0, 1);
  CHECK_FALSE(imp.valid);

  // Complementary outcomes sum to 1.
  const Statevector xi = xi_inner_state(4, 1.3, true);
  for (int q = 0; q < 4; ++q)
    CHECK(project_qubit(xi, q, 0).probability +
              project_qubit(xi, q, 1).probability ==
          doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("probabilities of small states") {
  CHECK(probabilities(zero_state(1)).at(0) == doctest::Approx(1));
  const Statevector t = xi_inner_state(2, 1, true);
  const auto p = probabilities(t);
  CHECK(p.size() == 3);
  CHECK(p.at(index_of_string("00")) == doctest::Approx(1.0 / 3));
  CHECK(p.at(index_of_string("10")) == doctest::Approx(1.0 / 3));
  CHECK(p.at(index_of_string("01")) == doctest::Approx(1.0 / 3));
}

TEST_CASE("sampling is deterministic and unbiased") {
  const auto c0 = sample(zero_state(2), 100, 9);
  CHECK(c0.at(0) == 100);
  Statevector plus = zero_state(1);
  plus.amps << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const auto a = sample(plus, 100000, 7);
  const auto b = sample(plus, 100000, 7);
  CHECK(a == b);
  const double sigma = std::sqrt(100000 * 0.25);
  CHECK(std::abs(static_cast<double>(a.at(0)) - 50000.0) < 5 * sigma);
}

TEST_CASE("entanglement entropy") {
  CHECK(entanglement_entropy(zero_state(4), 2) == doctest::Approx(0));
  Statevector bell = zero_state(2);
  bell.amps[0] = bell.amps[3] = 1 / std::sqrt(2.0);
  CHECK(entanglement_entropy(bell, 1) == doctest::Approx(std::log(2.0)));
  const Statevector xi = xi_state(10, 1.0);
  for (int cut = 1; cut < 10; ++cut) {
    CHECK(entanglement_entropy(xi, cut) <= std::log(2.0) + 1e-10);
    CHECK(entanglement_entropy(xi, cut) ==
          doctest::Approx(entanglement_entropy(xi, 10 - cut)).epsilon(1e-10));
  }
  CHECK_THROWS(entanglement_entropy(bell, 0));
}
