#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "scarforge/statevector.hpp"

namespace scarforge {

struct Distribution {
  std::map<std::string, double> probs;

  double mass() const;
};

Distribution distribution_from_state(const Statevector& state);
Distribution distribution_from_counts(
    const std::map<std::uint64_t, std::uint64_t>& counts, std::uint64_t shots,
    int n_qubits);

// -ln sum_x sqrt(p(x) q(x)); +infinity when the supports are disjoint.
double bhattacharyya(const Distribution& p, const Distribution& q);

// |<a|b>|^2.
double fidelity(const Statevector& a, const Statevector& b);

}  // namespace scarforge
