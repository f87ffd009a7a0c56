#include "scarforge/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace scarforge {

namespace {

const std::map<GateKind, std::string> kKindNames = {
    {GateKind::Ry, "ry"},       {GateKind::Cry0, "cry0"},
    {GateKind::Cry1, "cry1"},   {GateKind::X, "x"},
    {GateKind::Z, "z"},         {GateKind::Cnot, "cnot"},
    {GateKind::C0not, "c0not"}, {GateKind::Ccnot, "ccnot"},
    {GateKind::Cxy, "cxy"},     {GateKind::Dcxy, "dcxy"},
    {GateKind::Ublock, "ublock"}};

int fixed_arity(GateKind kind) {
  switch (kind) {
    case GateKind::Ry:
    case GateKind::X:
    case GateKind::Z:
      return 1;
    case GateKind::Cry0:
    case GateKind::Cry1:
    case GateKind::Cnot:
    case GateKind::C0not:
      return 2;
    case GateKind::Ccnot:
    case GateKind::Cxy:
      return 3;
    case GateKind::Dcxy:
      return 4;
    case GateKind::Ublock:
      return -1;  // 1..6
  }
  return -1;
}

bool has_angle(GateKind kind) {
  switch (kind) {
    case GateKind::Ry:
    case GateKind::Cry0:
    case GateKind::Cry1:
    case GateKind::Cxy:
    case GateKind::Dcxy:
      return true;
    default:
      return false;
  }
}

Eigen::Matrix2cd ry_matrix(double theta) {
  // R_Y(t) = cos(t/2) I - i sin(t/2) sigma_y, so R_Y(t)|0> has +sin on |1>.
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

// Pair rotation on the subspace {|01>,|10>} of two qubits.
Eigen::Matrix4cd xy_pair_matrix(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(1, 1) = c;
  m(2, 2) = c;
  m(2, 1) = s;   // |01> gains +sin |10>
  m(1, 2) = -s;  // |10> gains -sin |01>
  return m;
}

void validate(const Gate& g) {
  const int a = fixed_arity(g.kind);
  const int n = static_cast<int>(g.qubits.size());
  if (a >= 0 && n != a)
    throw std::invalid_argument("gate error: arity mismatch for " +
                                gate_kind_name(g.kind));
  if (g.kind == GateKind::Ublock) {
    if (n < 1 || n > 6)
      throw std::invalid_argument("gate error: ublock supports 1..6 qubits");
    const int d = 1 << n;
    if (g.matrix.rows() != d || g.matrix.cols() != d)
      throw std::invalid_argument("gate error: ublock matrix size mismatch");
    if ((g.matrix.adjoint() * g.matrix - Eigen::MatrixXcd::Identity(d, d))
            .cwiseAbs()
            .maxCoeff() > 1e-10)
      throw std::invalid_argument("gate error: ublock matrix is not unitary");
  }
}

}  // namespace

const std::string& gate_kind_name(GateKind kind) { return kKindNames.at(kind); }

GateKind gate_kind_from_name(const std::string& name) {
  for (auto& [k, v] : kKindNames)
    if (v == name) return k;
  throw std::invalid_argument("unknown gate kind '" + name + "'");
}

Gate Gate::ry(int q, double theta) { return {GateKind::Ry, {q}, theta, {}}; }
Gate Gate::cry0(int c, int t, double theta) {
  return {GateKind::Cry0, {c, t}, theta, {}};
}
Gate Gate::cry1(int c, int t, double theta) {
  return {GateKind::Cry1, {c, t}, theta, {}};
}
Gate Gate::x(int q) { return {GateKind::X, {q}, 0, {}}; }
Gate Gate::z(int q) { return {GateKind::Z, {q}, 0, {}}; }
Gate Gate::cnot(int c, int t) { return {GateKind::Cnot, {c, t}, 0, {}}; }
Gate Gate::c0not(int c, int t) { return {GateKind::C0not, {c, t}, 0, {}}; }
Gate Gate::ccnot(int c1, int c2, int t) {
  return {GateKind::Ccnot, {c1, c2, t}, 0, {}};
}
Gate Gate::cxy(int c, int a, int b, double theta) {
  return {GateKind::Cxy, {c, a, b}, theta, {}};
}
Gate Gate::dcxy(int c1, int a, int b, int c2, double theta) {
  return {GateKind::Dcxy, {c1, a, b, c2}, theta, {}};
}
Gate Gate::ublock(std::vector<int> qubits, Eigen::MatrixXcd u) {
  Gate g{GateKind::Ublock, std::move(qubits), 0, std::move(u)};
  validate(g);
  return g;
}

bool Gate::operator==(const Gate& other) const {
  if (kind != other.kind || qubits != other.qubits || angle != other.angle)
    return false;
  if (kind == GateKind::Ublock)
    return matrix.rows() == other.matrix.rows() && matrix == other.matrix;
  return true;
}

Eigen::MatrixXcd gate_matrix(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::Ry:
      return ry_matrix(gate.angle);
    case GateKind::X: {
      Eigen::Matrix2cd m;
      m << 0, 1, 1, 0;
      return m;
    }
    case GateKind::Z: {
      Eigen::Matrix2cd m;
      m << 1, 0, 0, -1;
      return m;
    }
    case GateKind::Cry0:
    case GateKind::Cry1: {
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
      const int block = gate.kind == GateKind::Cry0 ? 0 : 2;
      m.block<2, 2>(block, block) = ry_matrix(gate.angle);
      return m;
    }
    case GateKind::Cnot:
    case GateKind::C0not: {
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
      const int flip = gate.kind == GateKind::Cnot ? 2 : 0;
      const int keep = 2 - flip;
      m(keep, keep) = 1;
      m(keep + 1, keep + 1) = 1;
      m(flip, flip + 1) = 1;
      m(flip + 1, flip) = 1;
      return m;
    }
    case GateKind::Ccnot: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
      m(6, 6) = m(7, 7) = 0;
      m(6, 7) = m(7, 6) = 1;
      return m;
    }
    case GateKind::Cxy: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
      m.block<4, 4>(0, 0) = xy_pair_matrix(gate.angle);
      return m;
    }
    case GateKind::Dcxy: {
      // Window order (c1, a, b, c2): the rotated pair occupies the two
      // middle bits; active only when c1 = c2 = 0.
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(16, 16);
      const Eigen::Matrix4cd p = xy_pair_matrix(gate.angle);
      // basis indices with c1 = c2 = 0: (a b) bits at positions 2,1.
      auto idx = [](int pair) { return pair << 1; };
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(idx(r), idx(c)) = p(r, c);
      return m;
    }
    case GateKind::Ublock:
      return gate.matrix;
  }
  throw std::logic_error("unreachable");
}

void apply_gate(Statevector& state, const Gate& gate) {
  validate(gate);
  apply_unitary(state, gate.qubits, gate_matrix(gate));
}

Statevector simulate(const Circuit& circuit, const Statevector& initial) {
  if (initial.n_qubits != circuit.n_qubits)
    throw std::invalid_argument("simulate: dimension mismatch");
  Statevector s = initial;
  for (const Gate& g : circuit.gates) {
    for (int q : g.qubits)
      if (q < 0 || q >= circuit.n_qubits)
        throw std::invalid_argument("simulate: gate qubit out of range");
    apply_gate(s, g);
  }
  return s;
}

Statevector simulate(const Circuit& circuit) {
  return simulate(circuit, zero_state(circuit.n_qubits));
}

GateCounts gate_counts(const Circuit& circuit) {
  GateCounts out;
  for (const Gate& g : circuit.gates) {
    ++out.by_kind[gate_kind_name(g.kind)];
    if (g.qubits.size() == 2) ++out.two_qubit_gates;
    switch (g.kind) {
      case GateKind::Ry:
      case GateKind::X:
      case GateKind::Z:
        break;
      case GateKind::Cnot:
      case GateKind::C0not:
        out.cnot_equivalent += 1;
        break;
      case GateKind::Cry0:
      case GateKind::Cry1:
        out.cnot_equivalent += 2;
        break;
      case GateKind::Cxy:
        out.cnot_equivalent += 6;
        break;
      case GateKind::Ccnot:
        out.cnot_equivalent += 10;
        break;
      case GateKind::Dcxy:
        out.cnot_equivalent += 12;
        break;
      case GateKind::Ublock: {
        // Bookkeeping upper bound for a dense q-qubit block, 4^q.
        long long c = 1;
        for (std::size_t i = 0; i < g.qubits.size(); ++i) c *= 4;
        out.cnot_equivalent += c;
        break;
      }
    }
  }
  return out;
}

nlohmann::json circuit_to_json(const Circuit& circuit) {
  nlohmann::json doc;
  doc["n_qubits"] = circuit.n_qubits;
  doc["gates"] = nlohmann::json::array();
  for (const Gate& g : circuit.gates) {
    nlohmann::json jg;
    jg["kind"] = gate_kind_name(g.kind);
    jg["qubits"] = g.qubits;
    if (has_angle(g.kind)) jg["angle"] = g.angle;
    if (g.kind == GateKind::Ublock) {
      nlohmann::json rows = nlohmann::json::array();
      for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < g.matrix.cols(); ++c)
          row.push_back({g.matrix(r, c).real(), g.matrix(r, c).imag()});
        rows.push_back(row);
      }
      jg["matrix"] = rows;
    }
    doc["gates"].push_back(jg);
  }
  doc["metadata"] = circuit.metadata;
  return doc;
}

std::string to_json(const Circuit& circuit, int indent) {
  return circuit_to_json(circuit).dump(indent);
}

Circuit circuit_from_json(const nlohmann::json& doc) {
  Circuit c;
  try {
    c.n_qubits = doc.at("n_qubits").get<int>();
  } catch (const nlohmann::json::exception&) {
    throw std::runtime_error("circuit parse error: missing/invalid n_qubits");
  }
  if (doc.contains("metadata"))
    c.metadata = doc["metadata"].get<std::map<std::string, std::string>>();
  const auto& gates = doc.at("gates");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& jg = gates[i];
    Gate g;
    try {
      g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
      g.qubits = jg.at("qubits").get<std::vector<int>>();
      if (jg.contains("angle")) g.angle = jg["angle"].get<double>();
      if (g.kind == GateKind::Ublock) {
        const auto& rows = jg.at("matrix");
        const auto nr = rows.size();
        g.matrix.resize(static_cast<Eigen::Index>(nr),
                        static_cast<Eigen::Index>(nr));
        for (std::size_t r = 0; r < nr; ++r)
          for (std::size_t col = 0; col < nr; ++col)
            g.matrix(static_cast<Eigen::Index>(r),
                     static_cast<Eigen::Index>(col)) =
                cdouble(rows[r][col][0].get<double>(),
                        rows[r][col][1].get<double>());
      }
      validate(g);
    } catch (const std::exception& e) {
      throw std::runtime_error("circuit parse error at gate " +
                               std::to_string(i) + ": " + e.what());
    }
    for (int q : g.qubits)
      if (q < 0 || q >= c.n_qubits)
        throw std::runtime_error("circuit parse error at gate " +
                                 std::to_string(i) + ": qubit out of range");
    c.gates.push_back(std::move(g));
  }
  return c;
}

Circuit from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("circuit parse error: ") + e.what());
  }
  return circuit_from_json(doc);
}

}  // namespace scarforge
