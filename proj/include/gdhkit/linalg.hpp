#pragma once

// Eigen dense types over the exact scalars, plus the handful of exact
// elimination routines the rest of the library is built on.

#include "gdhkit/rational.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<gdhkit::Rat> {
  using Real = gdhkit::Rat;
  using NonInteger = gdhkit::Rat;
  using Nested = gdhkit::Rat;
  using Literal = long long;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
         ReadCost = 8, AddCost = 30, MulCost = 30 };
  static inline Real epsilon() { return gdhkit::Rat(0); }
  static inline Real dummy_precision() { return gdhkit::Rat(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<gdhkit::Int> {
  using Real = gdhkit::Int;
  using NonInteger = gdhkit::Rat;
  using Nested = gdhkit::Int;
  using Literal = long long;
  enum { IsComplex = 0, IsInteger = 1, IsSigned = 1, RequireInitialization = 1,
         ReadCost = 8, AddCost = 30, MulCost = 30 };
  static inline Real epsilon() { return gdhkit::Int(0); }
  static inline Real dummy_precision() { return gdhkit::Int(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace gdhkit {

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RowQ = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;
using MatI = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecI = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using MatL = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic>;
using VecL = Eigen::Matrix<i64, Eigen::Dynamic, 1>;

MatQ to_matq(const MatL& m);
MatQ to_matq(const MatI& m);
MatL to_matl(const MatI& m);  // throws on overflow
MatI to_mati(const MatL& m);
// Requires every entry integral.
MatI to_mati(const MatQ& m);

// Exact Gauss-Jordan.  Returns the rank; optionally records the reduced
// row echelon form and pivot columns.
int rank_q(MatQ m);

// Solves x * a = b for a single row vector, exact.  Empty optional when the
// system is inconsistent; when underdetermined an arbitrary solution is
// returned.
std::optional<RowQ> solve_left_q(const MatQ& a, const RowQ& b);

// Solves a * x = b, exact.
std::optional<VecQ> solve_right_q(const MatQ& a, const VecQ& b);

// Exact inverse; throws on singular input.
MatQ inverse_q(const MatQ& a);

Rat det_q(MatQ a);
Int det_i(const MatI& a);

// Basis of the left kernel {x : x * a = 0} as rows, over the rationals.
MatQ left_kernel_q(const MatQ& a);

// Row space basis in reduced row echelon form (rational).
MatQ row_space_q(MatQ a);

bool is_identity(const MatL& m);
MatL mat_power(const MatL& m, i64 e);

template <typename A, typename B>
bool mat_eq(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

// Multiplicative order of an integer matrix, searching up to `limit`;
// throws if no power up to limit is the identity.
i64 matrix_order(const MatL& m, i64 limit = 1000);

}  // namespace gdhkit
