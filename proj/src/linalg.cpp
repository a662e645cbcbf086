#include "gdhkit/linalg.hpp"

#include <stdexcept>

namespace gdhkit {

MatQ to_matq(const MatL& m) {
  MatQ r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

MatQ to_matq(const MatI& m) {
  MatQ r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

MatL to_matl(const MatI& m) {
  MatL r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_i64();
  return r;
}

MatI to_mati(const MatL& m) {
  MatI r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Int(m(i, j));
  return r;
}

MatI to_mati(const MatQ& m) {
  MatI r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer()) throw std::invalid_argument("to_mati: non-integral entry");
      r(i, j) = m(i, j).num();
    }
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<Eigen::Index> rref(MatQ& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) { p = i; break; }
    if (p < 0) continue;
    m.row(row).swap(m.row(p));
    Rat inv = Rat(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rat f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_q(MatQ m) { return static_cast<int>(rref(m).size()); }

std::optional<RowQ> solve_left_q(const MatQ& a, const RowQ& b) {
  // x * a = b  <=>  a^T x^T = b^T
  MatQ at = a.transpose();
  VecQ bt = b.transpose();
  auto x = solve_right_q(at, bt);
  if (!x) return std::nullopt;
  return RowQ(x->transpose());
}

std::optional<VecQ> solve_right_q(const MatQ& a, const VecQ& b) {
  MatQ aug(a.rows(), a.cols() + 1);
  aug.block(0, 0, a.rows(), a.cols()) = a;
  aug.col(a.cols()) = b;
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  VecQ x = VecQ::Zero(a.cols());
  for (size_t k = 0; k < pivots.size(); ++k) x(pivots[k]) = aug(k, a.cols());
  return x;
}

MatQ inverse_q(const MatQ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse_q: non-square");
  Eigen::Index n = a.rows();
  MatQ aug(n, 2 * n);
  aug.block(0, 0, n, n) = a;
  aug.block(0, n, n, n) = MatQ::Identity(n, n);
  auto pivots = rref(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != n || pivots.back() != n - 1)
    throw std::domain_error("inverse_q: singular matrix");
  return aug.block(0, n, n, n);
}

Rat det_q(MatQ a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det_q: non-square");
  Eigen::Index n = a.rows();
  Rat det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (!a(i, col).is_zero()) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != col) { a.row(col).swap(a.row(p)); det = -det; }
    det *= a(col, col);
    Rat inv = Rat(1) / a(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      Rat f = a(i, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

Int det_i(const MatI& a) {
  Rat d = det_q(to_matq(a));
  if (!d.is_integer()) throw std::logic_error("det_i: non-integral determinant");
  return d.num();
}

MatQ left_kernel_q(const MatQ& a) {
  // Rows x with x a = 0: kernel of a^T acting on column vectors.
  MatQ m = a.transpose();
  MatQ work = m;
  auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Eigen::Index nfree = m.cols() - static_cast<Eigen::Index>(pivots.size());
  MatQ kern(nfree, m.cols());
  Eigen::Index row = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    RowQ v = RowQ::Zero(m.cols());
    v(j) = Rat(1);
    for (size_t k = 0; k < pivots.size(); ++k) v(pivots[k]) = -work(k, j);
    kern.row(row++) = v;
  }
  return kern;
}

MatQ row_space_q(MatQ a) {
  auto pivots = rref(a);
  MatQ r(static_cast<Eigen::Index>(pivots.size()), a.cols());
  for (size_t k = 0; k < pivots.size(); ++k) r.row(static_cast<Eigen::Index>(k)) = a.row(static_cast<Eigen::Index>(k));
  return r;
}

bool is_identity(const MatL& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

MatL mat_power(const MatL& m, i64 e) {
  MatL result = MatL::Identity(m.rows(), m.cols());
  MatL base = m;
  while (e > 0) {
    if (e & 1) result = (result * base).eval();
    base = (base * base).eval();
    e >>= 1;
  }
  return result;
}

i64 matrix_order(const MatL& m, i64 limit) {
  MatL p = m;
  for (i64 k = 1; k <= limit; ++k) {
    if (is_identity(p)) return k;
    p = (p * m).eval();
  }
  throw std::domain_error("matrix_order: no order up to limit");
}

}  // namespace gdhkit
