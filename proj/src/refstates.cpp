#include "scarforge/refstates.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace scarforge {

namespace {

bool has_adjacent_ones(std::uint64_t x, int n, int first, int last) {
  for (int q = first; q < last; ++q)
    if (bit_of(x, q, n) && bit_of(x, q + 1, n)) return true;
  return false;
}

int popcount_range(std::uint64_t x, int n) {
  int w = 0;
  for (int q = 0; q < n; ++q) w += bit_of(x, q, n);
  return w;
}

}  // namespace

long long fibonacci(int n) {
  if (n < 1) throw std::invalid_argument("fibonacci: n must be >= 1");
  static std::vector<long long> table = {1, 1};
  while (static_cast<int>(table.size()) < n)
    table.push_back(table[table.size() - 1] + table[table.size() - 2]);
  return table[n - 1];
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long count_constrained(int N, int k) { return binomial(N - k - 1, k); }

long long fib_dim(int m) { return fibonacci(m + 2); }

double z_norm(int N, cdouble xi) {
  const double x2 = std::norm(xi);
  double z = 0, pw = 1;
  for (int k = 0; k <= N / 2; ++k) {
    z += pw * static_cast<double>(count_constrained(N, k));
    pw *= x2;
  }
  return z;
}

Statevector xi_state(int N, cdouble xi) {
  if (N < 4) throw std::invalid_argument("xi_state: N must be >= 4");
  Statevector s = zero_state(N);
  s.amps[0] = 0;
  for (std::int64_t x = 0; x < s.dim(); ++x) {
    const auto ux = static_cast<std::uint64_t>(x);
    if (bit_of(ux, 0, N) || bit_of(ux, N - 1, N)) continue;
    if (has_adjacent_ones(ux, N, 0, N - 1)) continue;
    cdouble a = 1.0;
    for (int q = 0; q < N; ++q)
      if (bit_of(ux, q, N)) a *= ((q + 1) % 2 ? -xi : xi);
    s.amps[x] = a;
  }
  s.amps /= s.amps.norm();
  return s;
}

Statevector xi_inner_state(int m, cdouble xi, bool tilde) {
  if (m < 1) throw std::invalid_argument("xi_inner_state: m must be >= 1");
  Statevector s = zero_state(m);
  s.amps[0] = 0;
  for (std::int64_t x = 0; x < s.dim(); ++x) {
    const auto ux = static_cast<std::uint64_t>(x);
    if (has_adjacent_ones(ux, m, 0, m - 1)) continue;
    cdouble a = 1.0;
    for (int q = 0; q < m; ++q)
      if (bit_of(ux, q, m)) a *= (!tilde && q % 2 ? -xi : xi);
    s.amps[x] = a;
  }
  s.amps /= s.amps.norm();
  return s;
}

Statevector scar_state(int N, int k) {
  if (k < 0 || k > N / 2 - 1)
    throw std::out_of_range("scar_state: k out of range");
  Statevector s = zero_state(N);
  for (int step = 0; step < k; ++step) {
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(s.dim());
    for (std::int64_t x = 0; x < s.dim(); ++x) {
      if (s.amps[x] == cdouble{}) continue;
      const auto ux = static_cast<std::uint64_t>(x);
      for (int site = 2; site <= N - 1; ++site) {
        const int q = site - 1;
        if (bit_of(ux, q, N) || bit_of(ux, q - 1, N) || bit_of(ux, q + 1, N))
          continue;
        const std::uint64_t y = ux | (std::uint64_t{1} << (N - 1 - q));
        const double sign = site % 2 ? -1.0 : 1.0;
        next[static_cast<std::int64_t>(y)] += sign * s.amps[x];
      }
    }
    s.amps = next;
  }
  double fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  s.amps /= fact * std::sqrt(static_cast<double>(count_constrained(N, k)));
  return s;
}

Statevector dicke(int m, int k) {
  const long long count = binomial(m, k);
  if (count < 1) throw std::invalid_argument("dicke: empty support");
  Statevector s = zero_state(m);
  s.amps[0] = 0;
  const double a = 1.0 / std::sqrt(static_cast<double>(count));
  for (std::int64_t x = 0; x < s.dim(); ++x)
    if (popcount_range(static_cast<std::uint64_t>(x), m) == k) s.amps[x] = a;
  return s;
}

Statevector projected_dicke(int m, int k) {
  const long long count = binomial(m - k + 1, k);
  if (count < 1) throw std::invalid_argument("projected_dicke: empty support");
  Statevector s = zero_state(m);
  s.amps[0] = 0;
  const double a = 1.0 / std::sqrt(static_cast<double>(count));
  for (std::int64_t x = 0; x < s.dim(); ++x) {
    const auto ux = static_cast<std::uint64_t>(x);
    if (popcount_range(ux, m) != k) continue;
    if (has_adjacent_ones(ux, m, 0, m - 1)) continue;
    s.amps[x] = a;
  }
  return s;
}

std::pair<Statevector, double> apply_fib_projector(const Statevector& state,
                                                   int first, int last) {
  if (first < 0 || last >= state.n_qubits || first > last)
    throw std::out_of_range("apply_fib_projector: bad range");
  Statevector out = state;
  double weight = 0;
  for (std::int64_t x = 0; x < state.dim(); ++x) {
    if (has_adjacent_ones(static_cast<std::uint64_t>(x), state.n_qubits, first,
                          last))
      out.amps[x] = 0;
    else
      weight += std::norm(out.amps[x]);
  }
  return {std::move(out), weight};
}

Statevector tilde_transform(const Statevector& state) {
  Statevector out = state;
  for (std::int64_t x = 0; x < state.dim(); ++x) {
    int ones = 0;
    for (int q = 0; q < state.n_qubits; q += 2)
      ones += bit_of(static_cast<std::uint64_t>(x), q, state.n_qubits);
    if (ones % 2) out.amps[x] = -out.amps[x];
  }
  return out;
}

}  // namespace scarforge
