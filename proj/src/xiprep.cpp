#include "scarforge/xiprep.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "scarforge/refstates.hpp"

namespace scarforge {

AngleSchedule angle_schedule(int m, double xi, bool tilde) {
  if (m < 1) throw std::invalid_argument("angle_schedule: m must be >= 1");
  if (xi < 0) throw std::invalid_argument("angle_schedule: xi must be >= 0");
  AngleSchedule s;
  s.m = m;
  s.xi = xi;
  s.tilde = tilde;
  s.theta.assign(m, 0.0);
  s.phi.assign(m + 1, 1.0);
  for (int j = m; j >= 1; --j) {
    const double xj = (!tilde && j % 2 == 0) ? -xi : xi;
    const double r = xj / s.phi[j];
    s.phi[j - 1] = std::sqrt(1 + r * r);
    s.theta[j - 1] = 2 * std::atan(r);
  }
  return s;
}

Circuit build_linear_circuit(int m, double xi, bool tilde) {
  const AngleSchedule s = angle_schedule(m, xi, tilde);
  Circuit c;
  c.n_qubits = m;
  c.gates.push_back(Gate::ry(0, s.theta[0]));
  for (int j = 2; j <= m; ++j)
    c.gates.push_back(Gate::cry0(j - 2, j - 1, s.theta[j - 1]));
  c.metadata["name"] = "xi-linear";
  c.metadata["m"] = std::to_string(m);
  c.metadata["xi"] = std::to_string(xi);
  c.metadata["tilde"] = tilde ? "true" : "false";
  return c;
}

std::vector<double> closed_form_angles_xi1(int m) {
  std::vector<double> theta(m);
  for (int i = 1; i <= m; ++i) {
    const double ratio = static_cast<double>(fibonacci(i)) / fibonacci(i + 1);
    theta[m - i] = 2 * std::atan(std::sqrt(ratio));
  }
  return theta;
}

Circuit build_stitch_circuit(const StitchPlan& plan, bool tilde) {
  if (plan.k_blocks < 1 || plan.m < 1)
    throw std::invalid_argument("build_stitch_circuit: bad plan");
  const int km = plan.k_blocks * plan.m;
  Circuit c;
  c.n_qubits = plan.total_qubits();
  const AngleSchedule s = angle_schedule(plan.m, plan.xi, true);
  for (int b = 0; b < plan.k_blocks; ++b) {
    const int base = b * plan.m;
    c.gates.push_back(Gate::ry(base, s.theta[0]));
    for (int j = 2; j <= plan.m; ++j)
      c.gates.push_back(Gate::cry0(base + j - 2, base + j - 1, s.theta[j - 1]));
  }
  std::string junctions;
  for (int j = 0; j < plan.k_blocks - 1; ++j) {
    const int left = (j + 1) * plan.m - 1;
    const int right = (j + 1) * plan.m;
    c.gates.push_back(Gate::ccnot(left, right, km + j));
    if (!junctions.empty()) junctions += ",";
    junctions += std::to_string(left) + "-" + std::to_string(right);
  }
  if (!tilde)
    for (int q = 1; q < km; q += 2) c.gates.push_back(Gate::z(q));
  c.metadata["name"] = "xi-stitch";
  c.metadata["m"] = std::to_string(plan.m);
  c.metadata["k_blocks"] = std::to_string(plan.k_blocks);
  c.metadata["xi"] = std::to_string(plan.xi);
  c.metadata["junctions"] = junctions;
  return c;
}

PostselectResult postselect_ancillas(const Statevector& state, int n_primary) {
  const int n = state.n_qubits;
  if (n_primary < 1 || n_primary > n)
    throw std::invalid_argument("postselect_ancillas: bad register split");
  PostselectResult res;
  res.probability = 1;
  Statevector cur = state;
  for (int q = n_primary; q < n; ++q) {
    ProjectionResult p = project_qubit(cur, q, 0);
    res.probability *= p.probability;
    if (!p.valid) {
      res.valid = false;
      res.state = zero_state(n_primary);
      return res;
    }
    cur = std::move(p.state);
  }
  // The ancillas occupy the low bits and now read 0; keep every 2^(n - np)th
  // amplitude.
  res.state.n_qubits = n_primary;
  res.state.amps = Eigen::VectorXcd::Zero(std::int64_t{1} << n_primary);
  const int shift = n - n_primary;
  for (std::int64_t x = 0; x < res.state.dim(); ++x)
    res.state.amps[x] = cur.amps[x << shift];
  return res;
}

Rational success_probability_closed(int m, int k) {
  if (m < 1 || k < 1)
    throw std::invalid_argument("success_probability_closed: bad parameters");
  long long num = fibonacci(k * m + 2);
  long long den = 1;
  const long long base = fibonacci(m + 2);
  for (int i = 0; i < k; ++i) den *= base;
  const long long g = std::gcd(num, den);
  return {num / g, den / g};
}

double success_probability_exact(int m, int k, double xi) {
  const int km = k * m;
  if (km > kMaxQubits)
    throw std::invalid_argument("success_probability_exact: k*m too large");
  const Statevector block = xi_inner_state(m, xi, true);
  Statevector full = block;
  for (int b = 1; b < k; ++b) {
    Statevector next;
    next.n_qubits = full.n_qubits + m;
    next.amps = Eigen::VectorXcd(full.dim() * block.dim());
    for (std::int64_t x = 0; x < full.dim(); ++x)
      next.amps.segment(x * block.dim(), block.dim()) =
          full.amps[x] * block.amps;
    full = std::move(next);
  }
  return apply_fib_projector(full, 0, km - 1).second;
}

}  // namespace scarforge
