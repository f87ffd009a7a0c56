#include "scarforge/hamiltonians.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace scarforge {

namespace {

Eigen::Matrix2cd proj0() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = 1;
  return m;
}

Eigen::Matrix2cd proj1() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(1, 1) = 1;
  return m;
}

}  // namespace

Eigen::Matrix2cd pauli_matrix(char p) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (p) {
    case 'I':
      m(0, 0) = m(1, 1) = 1;
      break;
    case 'X':
      m(0, 1) = m(1, 0) = 1;
      break;
    case 'Y':
      m(0, 1) = cdouble(0, -1);
      m(1, 0) = cdouble(0, 1);
      break;
    case 'Z':
      m(0, 0) = 1;
      m(1, 1) = -1;
      break;
    default:
      throw std::invalid_argument("pauli_matrix: unknown label");
  }
  return m;
}

SparseOp op_from_terms(int N, const std::vector<OpTerm>& terms) {
  const std::int64_t dim = std::int64_t{1} << N;
  std::vector<Eigen::Triplet<cdouble>> trips;
  for (const OpTerm& term : terms) {
    for (const SiteFactor& f : term.factors)
      if (f.site < 1 || f.site > N)
        throw std::invalid_argument("op_from_terms: site out of range");
    for (std::int64_t x = 0; x < dim; ++x) {
      // Expand the product of single-site factors acting on column x.
      std::vector<std::pair<std::int64_t, cdouble>> branches = {
          {x, term.coeff}};
      for (const SiteFactor& f : term.factors) {
        const int shift = N - f.site;
        std::vector<std::pair<std::int64_t, cdouble>> next;
        for (const auto& [y, a] : branches) {
          const int b = static_cast<int>((y >> shift) & 1);
          for (int bp = 0; bp < 2; ++bp) {
            const cdouble e = f.op(bp, b);
            if (e == cdouble{}) continue;
            std::int64_t z = y & ~(std::int64_t{1} << shift);
            z |= std::int64_t{bp} << shift;
            next.emplace_back(z, a * e);
          }
        }
        branches = std::move(next);
      }
      for (const auto& [y, a] : branches) trips.emplace_back(y, x, a);
    }
  }
  SparseOp op(dim, dim);
  op.setFromTriplets(trips.begin(), trips.end());
  return op;
}

SparseOp build_h0(int N, double lambda, double delta, double j) {
  if (N < 3) throw std::invalid_argument("build_h0: N >= 3");
  const Eigen::Matrix2cd X = pauli_matrix('X'), Z = pauli_matrix('Z');
  std::vector<OpTerm> terms;
  for (int i = 2; i <= N - 1; ++i) {
    terms.push_back({lambda, {{i, X}}});
    terms.push_back({-lambda, {{i - 1, Z}, {i, X}, {i + 1, Z}}});
  }
  for (int i = 1; i <= N; ++i) terms.push_back({delta, {{i, Z}}});
  for (int i = 1; i <= N - 1; ++i)
    terms.push_back({j, {{i, Z}, {i + 1, Z}}});
  return op_from_terms(N, terms);
}

SparseOp build_hxi(int N, double xi) {
  if (xi <= 0) throw std::invalid_argument("build_hxi: xi > 0");
  const Eigen::Matrix2cd X = pauli_matrix('X'), P = proj0(), Pp = proj1();
  std::vector<OpTerm> terms;
  for (int i = 2; i <= N - 1; ++i) {
    const double sign = i % 2 ? -1.0 : 1.0;
    terms.push_back({1 / xi, {{i - 1, P}, {i, Pp}, {i + 1, P}}});
    terms.push_back({xi, {{i - 1, P}, {i, P}, {i + 1, P}}});
    terms.push_back({-sign, {{i - 1, P}, {i, X}, {i + 1, P}}});
  }
  return op_from_terms(N, terms);
}

SparseOp build_hx(int N) {
  const Eigen::Matrix2cd X = pauli_matrix('X');
  std::vector<OpTerm> terms;
  for (int i = 2; i <= N - 1; ++i) {
    const double sign = i % 2 ? -1.0 : 1.0;
    terms.push_back({0.5, {}});
    terms.push_back({-0.5 * sign, {{i, X}}});
  }
  return op_from_terms(N, terms);
}

SparseOp build_hp(int N) {
  const Eigen::Matrix2cd X = pauli_matrix('X'), P = proj0(), Pp = proj1();
  std::vector<OpTerm> terms;
  for (int i = 2; i <= N - 1; ++i) {
    const double sign = i % 2 ? -1.0 : 1.0;
    terms.push_back({1, {{i - 1, Pp}, {i, Pp}}});
    terms.push_back({1, {{i, Pp}, {i + 1, Pp}}});
    terms.push_back({0.5, {{i - 1, P}, {i + 1, P}}});
    terms.push_back({-0.5 * sign, {{i - 1, P}, {i, X}, {i + 1, P}}});
  }
  return op_from_terms(N, terms);
}

SparseOp build_hs(int N, double s, double T) {
  if (s < 0 || s > T) throw std::invalid_argument("build_hs: s outside [0,T]");
  const double f = T == 0 ? 1.0 : s / T;
  return (1 - f) * build_hx(N) + f * build_hp(N);
}

SparseOp build_hj_compressed(int N) {
  if (N < 6 || N % 2)
    throw std::invalid_argument("build_hj_compressed: N even, >= 6");
  const int kmax = N / 2 - 1;
  const Eigen::Matrix2cd Z = pauli_matrix('Z');
  std::vector<OpTerm> terms;
  terms.push_back({1, {{1, Z}}});
  terms.push_back({-1, {{kmax, Z}}});
  terms.push_back({-(N / 2.0 - 1), {}});
  for (int i = 1; i <= kmax - 1; ++i)
    terms.push_back({-1, {{i, Z}, {i + 1, Z}}});
  return op_from_terms(kmax, terms);
}

double scar_energy(int N, int k, double delta, double j) {
  return delta * N + j * (N - 1) - (2 * delta + 4 * j) * k;
}

double expectation(const SparseOp& op, const Statevector& state) {
  if (op.rows() != state.dim())
    throw std::invalid_argument("expectation: dimension mismatch");
  return state.amps.dot(op * state.amps).real();
}

Statevector matvec(const SparseOp& op, const Statevector& state) {
  if (op.rows() != state.dim())
    throw std::invalid_argument("matvec: dimension mismatch");
  Statevector out = state;
  out.amps = op * state.amps;
  return out;
}

SparseOp restrict_boundary_zero(const SparseOp& op, int N) {
  const std::int64_t full = std::int64_t{1} << N;
  if (op.rows() != full)
    throw std::invalid_argument("restrict_boundary_zero: dimension mismatch");
  const std::int64_t half = std::int64_t{1} << (N - 1);
  auto keep = [&](std::int64_t x) { return x < half && (x & 1) == 0; };
  std::vector<Eigen::Triplet<cdouble>> trips;
  for (int c = 0; c < op.outerSize(); ++c)
    for (SparseOp::InnerIterator it(op, c); it; ++it)
      if (keep(it.row()) && keep(it.col()))
        trips.emplace_back(static_cast<int>(it.row() >> 1),
                           static_cast<int>(it.col() >> 1), it.value());
  SparseOp out(full >> 2, full >> 2);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

std::vector<double> lowest_eigenvalues(const SparseOp& op, int count) {
  const std::int64_t dim = op.rows();
  if (count < 1 || count > dim)
    throw std::invalid_argument("lowest_eigenvalues: bad count");
  if (dim <= 1024) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        Eigen::MatrixXcd(op), Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(),
                            es.eigenvalues().data() + count);
    return out;
  }

  // Lanczos with full reorthogonalization.
  const int maxit = static_cast<int>(std::min<std::int64_t>(dim, 400));
  std::vector<Eigen::VectorXcd> v;
  std::mt19937_64 rng(12345);
  Eigen::VectorXcd w(dim);
  for (std::int64_t i = 0; i < dim; ++i)
    w[i] = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
  w /= w.norm();
  v.push_back(w);
  std::vector<double> alpha, beta;
  std::vector<double> prev(count, 1e300);
  for (int it = 0; it < maxit; ++it) {
    w = op * v.back();
    alpha.push_back(v.back().dot(w).real());
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : v) w -= u.dot(w) * u;
    const double b = w.norm();
    const int n = it + 1;
    if (n >= count && (it % 5 == 4 || b < 1e-12 || it == maxit - 1)) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i) t(i, i) = alpha[i];
      for (int i = 0; i + 1 < n; ++i)
        t(i, i + 1) = t(i + 1, i) = beta[i];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t,
                                                        Eigen::EigenvaluesOnly);
      std::vector<double> cur(es.eigenvalues().data(),
                              es.eigenvalues().data() + std::min(count, n));
      bool done = static_cast<int>(cur.size()) == count;
      if (done)
        for (int i = 0; i < count; ++i)
          if (std::abs(cur[i] - prev[i]) > 1e-9) done = false;
      prev.assign(count, 1e300);
      std::copy(cur.begin(), cur.end(), prev.begin());
      if (done || b < 1e-12) return {prev.begin(), prev.begin() + count};
    }
    if (b < 1e-12) break;
    beta.push_back(b);
    v.push_back(w / b);
  }
  return {prev.begin(), prev.begin() + count};
}

Eigen::VectorXcd hx_ground_reduced(int N) {
  const int m = N - 2;
  const std::int64_t dim = std::int64_t{1} << m;
  Eigen::VectorXcd g(dim);
  const double a = std::pow(2.0, -0.5 * m);
  for (std::int64_t x = 0; x < dim; ++x) {
    int minus = 0;
    for (int q = 0; q < m; ++q) {
      const int site = q + 2;
      if (site % 2 && ((x >> (m - 1 - q)) & 1)) ++minus;
    }
    g[x] = minus % 2 ? -a : a;
  }
  return g;
}

}  // namespace scarforge
