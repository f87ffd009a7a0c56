#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "scarforge/statevector.hpp"

namespace scarforge {

enum class GateKind { Ry, Cry0, Cry1, X, Z, Cnot, C0not, Ccnot, Cxy, Dcxy, Ublock };

const std::string& gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

// Typed gate descriptor. Rotation kinds carry an angle; ublock carries a
// dense unitary on 1..6 qubits. Controlled-XY conventions:
//   cxy  qubits = {control, a, b}: rotates the (a,b) pair by `angle` when
//         the control is |0>.
//   dcxy qubits = {c1, a, b, c2}: same rotation gated on both outer qubits
//         being |0>. The angle is the rotation of the middle pair itself,
//         |01> -> cos(t)|01> + sin(t)|10>, |10> -> cos(t)|10> - sin(t)|01>.
struct Gate {
  GateKind kind;
  std::vector<int> qubits;
  double angle = 0.0;
  Eigen::MatrixXcd matrix;  // ublock only

  static Gate ry(int q, double theta);
  static Gate cry0(int control, int target, double theta);
  static Gate cry1(int control, int target, double theta);
  static Gate x(int q);
  static Gate z(int q);
  static Gate cnot(int control, int target);
  static Gate c0not(int control, int target);
  static Gate ccnot(int c1, int c2, int target);
  static Gate cxy(int control, int a, int b, double theta);
  static Gate dcxy(int c1, int a, int b, int c2, double theta);
  static Gate ublock(std::vector<int> qubits, Eigen::MatrixXcd u);

  bool operator==(const Gate& other) const;
};

// Explicit unitary of the gate on its own window (2^arity square).
Eigen::MatrixXcd gate_matrix(const Gate& gate);

void apply_gate(Statevector& state, const Gate& gate);

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;  // applied in list order, index 0 first
  std::map<std::string, std::string> metadata;
};

Statevector simulate(const Circuit& circuit, const Statevector& initial);
Statevector simulate(const Circuit& circuit);  // from |0...0>

struct GateCounts {
  std::map<std::string, int> by_kind;
  int two_qubit_gates = 0;      // gates acting on exactly two qubits
  long long cnot_equivalent = 0;
};

GateCounts gate_counts(const Circuit& circuit);

std::string to_json(const Circuit& circuit, int indent = 2);
Circuit from_json(const std::string& text);
nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& doc);

}  // namespace scarforge
