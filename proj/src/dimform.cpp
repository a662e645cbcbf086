#include "gdhkit/dimform.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gdhkit {

Rat EisensteinCoefficients::at(i64 d) const {
  for (const auto& [dd, c] : coeffs)
    if (dd == d) return c;
  throw std::invalid_argument("EisensteinCoefficients::at: not a divisor");
}

namespace {

std::vector<i64> divisors_of(i64 n) {
  std::vector<i64> ds;
  for (i64 t = 1; t <= n; ++t)
    if (n % t == 0) ds.push_back(t);
  return ds;
}

// Fraction-free Gaussian elimination (Bareiss) for an integer system A x = b.
std::vector<Rat> bareiss_solve(std::vector<std::vector<Int>> a, std::vector<Int> b) {
  size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("bareiss_solve: non-square");
  Int prev(1);
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), size_t{0});
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("bareiss_solve: singular system");
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      b[i] = (a[k][k] * b[i] - a[i][k] * b[k]) / prev;
      a[i][k] = Int(0);
    }
    prev = a[k][k];
  }
  std::vector<Rat> x(n);
  for (size_t i = n; i-- > 0;) {
    Rat s(b[i]);
    for (size_t j = i + 1; j < n; ++j) s -= Rat(a[i][j]) * x[j];
    x[i] = s / Rat(a[i][i]);
  }
  return x;
}

}  // namespace

const EisensteinCoefficients& eisenstein_coeffs(i64 n) {
  static std::map<i64, EisensteinCoefficients> cache;
  static std::mutex mu;
  if (n < 1) throw std::invalid_argument("eisenstein_coeffs: n must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  auto ds = divisors_of(n);
  size_t k = ds.size();
  // Row for divisor t, scaled by t to stay integral: sum_d t*(t,d) c(d) = n.
  std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
  std::vector<Int> b(k, Int(n));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) a[i][j] = Int(ds[i] * std::gcd(ds[i], ds[j]));
  auto x = bareiss_solve(std::move(a), std::move(b));

  EisensteinCoefficients ec;
  ec.n = n;
  for (size_t j = 0; j < k; ++j) ec.coeffs.push_back({ds[j], x[j]});
  // Verify the defining relations exactly.
  for (i64 t : ds) {
    Rat s(0);
    for (const auto& [d, c] : ec.coeffs) s += Rat(std::gcd(t, d)) * c;
    if (s != Rat(n, t)) throw std::logic_error("eisenstein_coeffs: defining relation failed");
  }
  return cache.emplace(n, std::move(ec)).first->second;
}

i64 fixed_dim(const CycleShape& shape, i64 d) {
  i64 s = 0;
  for (auto [t, b] : shape.exponents) s += b * std::gcd(t, d);
  return s;
}

Rat dimension_bound(const CycleShape& shape, i64 n) {
  i64 m = shape.order();
  if (n < 1 || n % m != 0)
    throw std::invalid_argument("dimension_bound: shape order does not divide n");
  Rat closed(24);
  for (auto [t, b] : shape.exponents) closed += Rat(n) * Rat(b, t);
  const auto& ec = eisenstein_coeffs(n);
  Rat viaCoeffs(24);
  for (const auto& [d, c] : ec.coeffs) viaCoeffs += c * Rat(fixed_dim(shape, d));
  if (closed != viaCoeffs)
    throw std::logic_error("dimension_bound: coefficient form disagrees with closed form");
  return closed;
}

Rat vacuum_anomaly(const CycleShape& shape) {
  Rat s(0);
  for (auto [t, b] : shape.exponents) s += Rat(b) * (Rat(t) - Rat(1, t));
  return s / Rat(24);
}

i64 automorphism_type(i64 n, const Rat& rho) {
  if (n < 1) throw std::invalid_argument("automorphism_type: n must be positive");
  Rat scaled = Rat(n * n) * rho;
  if (!scaled.is_integer())
    throw std::invalid_argument("automorphism_type: n^2 rho is not an integer (rho=" +
                                rho.str() + ", n=" + std::to_string(n) + ")");
  return floor_mod(scaled.num(), Int(n)).to_i64();
}

Rat vsf_bound(const InnerAutomorphism& a, i64 n) {
  i64 m = a.order();
  if (n % m != 0) throw std::invalid_argument("vsf_bound: order does not divide n");
  auto shape = cycle_shape(eigenspace_dims(a), m);
  if (!shape.ok) throw std::invalid_argument("vsf_bound: " + shape.message);
  Rat bound(24);
  for (size_t k = 0; k < a.components.size(); ++k) {
    const auto& c = a.components[k];
    const RootSystem& rs = generate_roots(c.type);
    i64 hv = dual_coxeter(c.type);
    VecQ diff = delta(a, k) - rs.weyl_vector / Rat(hv);
    bound += Rat(12 * n) * Rat(hv) * rs.inner(diff, diff);
  }
  if (bound != dimension_bound(shape.shape, n))
    throw std::logic_error("vsf_bound: disagrees with cycle-shape bound");
  return bound;
}

}  // namespace gdhkit
