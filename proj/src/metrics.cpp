#include "scarforge/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace scarforge {

double Distribution::mass() const {
  double m = 0;
  for (const auto& [_, p] : probs) m += p;
  return m;
}

Distribution distribution_from_state(const Statevector& state) {
  Distribution d;
  for (const auto& [idx, p] : probabilities(state))
    d.probs[bitstring_of(idx, state.n_qubits)] = p;
  return d;
}

Distribution distribution_from_counts(
    const std::map<std::uint64_t, std::uint64_t>& counts, std::uint64_t shots,
    int n_qubits) {
  std::uint64_t total = 0;
  for (const auto& [_, c] : counts) total += c;
  if (total != shots)
    throw std::invalid_argument("distribution_from_counts: count sum mismatch");
  Distribution d;
  for (const auto& [idx, c] : counts)
    d.probs[bitstring_of(idx, n_qubits)] =
        static_cast<double>(c) / static_cast<double>(shots);
  return d;
}

double bhattacharyya(const Distribution& p, const Distribution& q) {
  double s = 0;
  for (const auto& [x, px] : p.probs) {
    const auto it = q.probs.find(x);
    if (it != q.probs.end()) s += std::sqrt(px * it->second);
  }
  if (s <= 0) return std::numeric_limits<double>::infinity();
  // Normalize by the masses so truncation rounding cancels; for identical
  // inputs the coefficient is then exactly 1 and the distance exactly 0.
  s /= std::sqrt(p.mass() * q.mass());
  return std::max(0.0, -std::log(s));
}

double fidelity(const Statevector& a, const Statevector& b) {
  return std::norm(inner_product(a, b));
}

}  // namespace scarforge
