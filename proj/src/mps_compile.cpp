#include "scarforge/mps_compile.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace scarforge {

namespace {

int bond_bits(Eigen::Index r) {
  int p = 0;
  while ((Eigen::Index{1} << p) < r) ++p;
  return p;
}

// Orthonormal completion of the first `have` columns against standard basis
// vectors; candidates that project almost entirely onto the span are skipped.
void complete_columns(Eigen::MatrixXd& u, Eigen::Index have) {
  const Eigen::Index d = u.rows();
  Eigen::Index next = have;
  for (Eigen::Index cand = 0; cand < d && next < d; ++cand) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(d, cand);
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < next; ++j)
        v -= u.col(j).dot(v) * u.col(j);
    const double nrm = v.norm();
    if (nrm < 1e-8) continue;
    u.col(next++) = v / nrm;
  }
  if (next < d)
    throw std::runtime_error("compile_mps: column completion failed");
}

}  // namespace

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> dfa_transition_matrices(int k) {
  if (k < 1) throw std::invalid_argument("dfa_transition_matrices: k >= 1");
  const int d = 2 * k;
  Eigen::MatrixXd m0 = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd m1 = Eigen::MatrixXd::Zero(d, d);
  // State indices: S0 = 0, A_j = 2j - 1, B_j = 2j, F_k = 2k - 1.
  m0(0, 0) = 1;
  m0(d - 1, d - 1) = 1;
  m1(0, std::min(1, d - 1)) = 1;
  for (int j = 1; j <= k - 1; ++j) {
    m0(2 * j - 1, 2 * j) = 1;
    m0(2 * j, 2 * j) = 1;
    m1(2 * j, 2 * j + 1) = 1;
  }
  return {m0, m1};
}

Mps projected_dicke_mps(int m, int k) {
  if (m < 1 || k < 1)
    throw std::invalid_argument("projected_dicke_mps: bad parameters");
  auto [m0, m1] = dfa_transition_matrices(k);
  Mps mps;
  mps.m = m;
  mps.chi = 2 * k;
  mps.m0.assign(m, m0);
  mps.m1.assign(m, m1);
  mps.L = Eigen::RowVectorXd::Unit(2 * k, 0);
  mps.R = Eigen::VectorXd::Unit(2 * k, 2 * k - 1);
  return mps;
}

double mps_amplitude(const Mps& mps, const std::string& bits) {
  if (static_cast<int>(bits.size()) != mps.m)
    throw std::invalid_argument("mps_amplitude: length mismatch");
  Eigen::RowVectorXd v = mps.L;
  for (int i = 0; i < mps.m; ++i) v = v * (bits[i] == '1' ? mps.m1 : mps.m0)[i];
  return v.dot(mps.R);
}

Statevector mps_to_state(const Mps& mps) {
  if (mps.m > 20) throw std::invalid_argument("mps_to_state: m too large");
  Statevector s = zero_state(mps.m);
  s.amps[0] = 0;
  std::vector<Eigen::RowVectorXd> stack(mps.m + 1);
  stack[0] = mps.L;
  // Depth-first over bitstrings, reusing the prefix contraction.
  std::uint64_t x = 0;
  int depth = 0;
  while (true) {
    if (depth == mps.m) {
      s.amps[static_cast<std::int64_t>(x)] = stack[depth].dot(mps.R);
      while (depth > 0 && (x & (std::uint64_t{1} << (mps.m - depth)))) {
        x &= ~(std::uint64_t{1} << (mps.m - depth));
        --depth;
      }
      if (depth == 0) break;
      x |= std::uint64_t{1} << (mps.m - depth);
      stack[depth] = stack[depth - 1] * mps.m1[depth - 1];
    } else {
      stack[depth + 1] = stack[depth] * mps.m0[depth];
      ++depth;
    }
  }
  const double nrm = s.amps.norm();
  if (nrm < 1e-300) throw std::invalid_argument("mps_to_state: zero state");
  s.amps /= nrm;
  return s;
}

IsometryStaircase compile_mps(const Mps& mps) {
  const int m = mps.m;
  if (m < 1) throw std::invalid_argument("compile_mps: empty MPS");
  if (mps.chi > 32) throw std::invalid_argument("compile_mps: chi too large");

  // Boundary vectors folded into the edge tensors.
  std::vector<std::array<Eigen::MatrixXd, 2>> t(m);
  for (int i = 0; i < m; ++i) {
    t[i][0] = mps.m0[i];
    t[i][1] = mps.m1[i];
  }
  t[0][0] = mps.L * t[0][0];
  t[0][1] = mps.L * t[0][1];
  t[m - 1][0] = t[m - 1][0] * mps.R;
  t[m - 1][1] = t[m - 1][1] * mps.R;

  // Right-to-left rank reduction so every bond carries its exact Schmidt
  // rank before the QR sweep.
  for (int i = m - 1; i >= 1; --i) {
    const Eigen::Index rows = t[i][0].rows(), cols = t[i][0].cols();
    Eigen::MatrixXd grouped(rows, 2 * cols);
    grouped << t[i][0], t[i][1];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        grouped, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    Eigen::Index r = 0;
    while (r < sv.size() && sv[r] > 1e-12 * std::max(sv[0], 1.0)) ++r;
    r = std::max<Eigen::Index>(r, 1);
    Eigen::MatrixXd vt = svd.matrixV().leftCols(r).transpose();
    t[i][0] = vt.leftCols(cols);
    t[i][1] = vt.rightCols(cols);
    const Eigen::MatrixXd carry =
        svd.matrixU().leftCols(r) * sv.head(r).asDiagonal();
    t[i - 1][0] = t[i - 1][0] * carry;
    t[i - 1][1] = t[i - 1][1] * carry;
  }

  IsometryStaircase out;
  out.m = m;
  Eigen::MatrixXd c = Eigen::MatrixXd::Identity(1, 1);
  std::vector<IsometryBlock> blocks(m);
  for (int i = 0; i < m; ++i) {
    const Eigen::Index rp = c.rows();  // incoming bond rank
    const Eigen::MatrixXd top = c * t[i][0];
    const Eigen::MatrixXd bot = c * t[i][1];
    Eigen::MatrixXd b(2 * rp, top.cols());
    b << top, bot;
    const Eigen::Index r = std::min(b.rows(), b.cols());
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(b);
    Eigen::MatrixXd q =
        qr.householderQ() * Eigen::MatrixXd::Identity(b.rows(), r);
    Eigen::MatrixXd rr = qr.matrixQR()
                             .topRows(r)
                             .triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < r; ++j)
      if (rr(j, j) < 0) {
        q.col(j) = -q.col(j);
        rr.row(j) = -rr.row(j);
      }
    c = rr;

    const int pp = bond_bits(rp);
    const Eigen::Index d = Eigen::Index{1} << (pp + 1);
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(d, d);
    // Input column b on the low bits; output (bond a on high bits, emitted
    // bit s on the lowest).
    for (Eigen::Index col = 0; col < r; ++col)
      for (int s = 0; s < 2; ++s)
        for (Eigen::Index a = 0; a < rp; ++a)
          u(a * 2 + s, col) = q(s * rp + a, col);
    complete_columns(u, r);

    IsometryBlock blk;
    for (int qb = i - pp; qb <= i; ++qb) blk.qubits.push_back(qb);
    blk.u = u.cast<cdouble>();
    blocks[static_cast<std::size_t>(i)] = std::move(blk);
  }
  if (c.rows() != 1 || c.cols() != 1)
    throw std::runtime_error("compile_mps: sweep did not close");
  // Application order: last site first.
  for (int i = m - 1; i >= 0; --i)
    out.blocks.push_back(std::move(blocks[static_cast<std::size_t>(i)]));
  return out;
}

Circuit staircase_to_circuit(const IsometryStaircase& staircase) {
  Circuit c;
  c.n_qubits = staircase.m;
  for (const IsometryBlock& b : staircase.blocks)
    c.gates.push_back(Gate::ublock(b.qubits, b.u));
  c.metadata["name"] = "mps-staircase";
  return c;
}

long long depth_estimate(int m, int k) {
  if (k < 1) throw std::invalid_argument("depth_estimate: k >= 1");
  const int lg = std::max(
      static_cast<int>(std::ceil(std::log2(static_cast<double>(std::max(k, 2))))),
      1);
  return static_cast<long long>(m) * std::max(k, 1) * lg * lg;
}

}  // namespace scarforge
