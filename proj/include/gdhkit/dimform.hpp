#pragma once

// Dimension-formula coefficients c_n(d), the orbifold dimension bound in
// fixed-dimension and cycle-shape form, vacuum anomalies and the type of a
// finite-order automorphism.

#include "gdhkit/kacauto.hpp"

#include <vector>

namespace gdhkit {

struct EisensteinCoefficients {
  i64 n = 1;
  std::vector<std::pair<i64, Rat>> coeffs;  // (divisor d, c_n(d)), d ascending

  Rat at(i64 d) const;
};

// Unique solution of sum_{d|n} (t,d) c_n(d) = n/t for all t|n, verified
// against the defining relations after the solve.  Memoised; safe for
// concurrent callers (a mutex guards the cache).
const EisensteinCoefficients& eisenstein_coeffs(i64 n);

// dim of the fixed space of the d-th power: sum_t b_t gcd(t, d).
i64 fixed_dim(const CycleShape& shape, i64 d);

// 24 + n sum_t b_t/t; cross-checked against 24 + sum_d c_n(d) fixed_dim(d).
// Requires the shape order to divide n.
Rat dimension_bound(const CycleShape& shape, i64 n);

// rho_nu = (1/24) sum_t b_t (t - 1/t).
Rat vacuum_anomaly(const CycleShape& shape);

// t = n^2 rho mod n; rejects rho with n^2 rho non-integral.
i64 automorphism_type(i64 n, const Rat& rho);

// 24 + 12 n sum_i h_i^vee |delta_i - rho_i/h_i^vee|^2.  Requires the
// restriction to be quasirational with order dividing n; asserts agreement
// with the cycle-shape bound.
Rat vsf_bound(const InnerAutomorphism& a, i64 n);

}  // namespace gdhkit
