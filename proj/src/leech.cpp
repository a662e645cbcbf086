#include "gdhkit/leech.hpp"

#include "gdhkit/dimform.hpp"

#include <json.hpp>

#include <bit>
#include <fstream>
#include <stdexcept>

namespace gdhkit {

namespace {

IntegerLattice construct_leech() {
  const GolayCode& code = build_golay();
  // Spanning rows in ambient (sqrt(8)-scaled) coordinates.
  std::vector<VecL> rows;
  for (uint32_t g : code.generators) {
    VecL r = VecL::Zero(24);
    for (int i = 0; i < 24; ++i)
      if (g & (1u << i)) r(i) = 2;
    rows.push_back(r);
  }
  for (int j = 1; j < 24; ++j) {
    VecL r = VecL::Zero(24);
    r(0) = 4;
    r(j) = -4;
    rows.push_back(r);
  }
  {
    VecL r = VecL::Zero(24);
    r(0) = 4;
    r(1) = 4;
    rows.push_back(r);
  }
  {
    VecL r = VecL::Constant(24, 1);
    r(0) = -3;
    rows.push_back(r);
  }
  MatI span(static_cast<Eigen::Index>(rows.size()), 24);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < 24; ++j) span(static_cast<Eigen::Index>(i), j) = Int(rows[i](j));
  auto h = hnf(span);
  MatQ basis(24, 24);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) basis(i, j) = Rat(h.h(i, j));
  for (Eigen::Index i = 24; i < h.h.rows(); ++i)
    for (Eigen::Index j = 0; j < 24; ++j)
      if (!h.h(i, j).is_zero()) throw std::logic_error("leech: spanning set rank > 24");

  IntegerLattice lat = IntegerLattice::from_basis(basis, Rat(1, 8));
  MatQ g = lat.gram();
  if (det_q(g) != Rat(1)) throw std::logic_error("leech: determinant not 1");
  for (int i = 0; i < 24; ++i) {
    if (!g(i, i).is_integer() || g(i, i).num().is_odd())
      throw std::logic_error("leech: gram diagonal not even");
    for (int j = 0; j < 24; ++j)
      if (!g(i, j).is_integer()) throw std::logic_error("leech: gram not integral");
  }
  return lat;
}

MatQ leech_gram() {
  static const MatQ g = build_leech().gram();
  return g;
}

}  // namespace

const IntegerLattice& build_leech() {
  static const IntegerLattice lat = construct_leech();
  return lat;
}

LatticeIsometry make_isometry(MatL m, std::string name) {
  if (m.rows() != 24 || m.cols() != 24)
    throw std::invalid_argument("make_isometry: expected a 24x24 matrix");
  MatQ g = leech_gram();
  MatQ mq = to_matq(m);
  if (!mat_eq(MatQ(mq * g * mq.transpose()), g))
    throw std::invalid_argument("make_isometry: gram matrix not preserved");
  LatticeIsometry iso;
  iso.matrix = std::move(m);
  iso.order = matrix_order(iso.matrix, 100);
  iso.name = std::move(name);
  return iso;
}

LatticeIsometry isometry_from_signed_permutation(const std::array<int, 24>& perm,
                                                 uint32_t sign_mask, std::string name) {
  const IntegerLattice& leech = build_leech();
  // Ambient action P: e_i -> s_i e_{perm[i]}; basis matrix M = B P B^{-1}.
  MatQ p = MatQ::Zero(24, 24);
  for (int i = 0; i < 24; ++i)
    p(i, perm[static_cast<size_t>(i)]) = (sign_mask & (1u << i)) ? Rat(-1) : Rat(1);
  MatQ m = leech.basis * p * inverse_q(leech.basis);
  MatL ml(24, 24);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      if (!m(i, j).is_integer())
        throw std::invalid_argument(
            "isometry_from_signed_permutation: does not preserve the lattice");
      ml(i, j) = m(i, j).num().to_i64();
    }
  return make_isometry(std::move(ml), std::move(name));
}

namespace {

std::vector<i64> divisors_of(i64 n) {
  std::vector<i64> ds;
  for (i64 t = 1; t <= n; ++t)
    if (n % t == 0) ds.push_back(t);
  return ds;
}

// Characteristic polynomial coefficients of a 24x24 integer matrix via
// Newton's identities on exact power traces; index k holds the coefficient
// of x^k.
std::vector<Rat> char_poly(const MatL& m) {
  Eigen::Index n = m.rows();
  std::vector<Rat> p(static_cast<size_t>(n) + 1);
  std::vector<Rat> power_traces(static_cast<size_t>(n) + 1, Rat(0));
  MatI mi = to_mati(m);
  MatI acc = MatI::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    acc = (acc * mi).eval();
    Int tr(0);
    for (Eigen::Index i = 0; i < n; ++i) tr += acc(i, i);
    power_traces[static_cast<size_t>(k)] = Rat(tr);
  }
  // e_0 = 1; k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
  std::vector<Rat> e(static_cast<size_t>(n) + 1, Rat(0));
  e[0] = Rat(1);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Rat s(0);
    for (Eigen::Index i = 1; i <= k; ++i) {
      Rat term = e[static_cast<size_t>(k - i)] * power_traces[static_cast<size_t>(i)];
      s += (i % 2 == 1) ? term : -term;
    }
    e[static_cast<size_t>(k)] = s / Rat(static_cast<i64>(k));
  }
  // char poly = sum_k (-1)^k e_k x^{n-k}
  for (Eigen::Index k = 0; k <= n; ++k)
    p[static_cast<size_t>(n - k)] = (k % 2 == 0) ? e[static_cast<size_t>(k)] : Rat(-1) * e[static_cast<size_t>(k)];
  return p;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<Rat> cyclotomic_power(i64 t, i64 e) {
  // (x^t - 1)^e for e >= 0
  std::vector<Rat> base(static_cast<size_t>(t) + 1, Rat(0));
  base[0] = Rat(-1);
  base[static_cast<size_t>(t)] = Rat(1);
  std::vector<Rat> r{Rat(1)};
  for (i64 i = 0; i < e; ++i) r = poly_mul(r, base);
  return r;
}

}  // namespace

namespace {

i64 euler_phi(i64 n) {
  i64 result = n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

CycleShape cycle_shape_of(const LatticeIsometry& iso) {
  i64 m = iso.order;
  auto divs = divisors_of(m);
  // dim ker(nu^d - 1) = sum_{e | d} phi(e) A_e where A_e is the multiplicity
  // of the primitive e-th roots of unity.
  std::map<i64, i64> fixed_rank;
  for (i64 d : divs) {
    MatL p = mat_power(iso.matrix, d);
    MatQ pm = to_matq(p) - MatQ::Identity(24, 24);
    fixed_rank[d] = 24 - rank_q(pm);
  }
  std::map<i64, i64> mult;  // A_e
  for (i64 d : divs) {
    i64 val = fixed_rank[d];
    for (i64 e : divs)
      if (e < d && d % e == 0) val -= euler_phi(e) * mult[e];
    if (val % euler_phi(d) != 0)
      throw std::domain_error("cycle_shape_of: not quasirational (fractional multiplicity)");
    mult[d] = val / euler_phi(d);
  }
  // A_d = sum_{d | t | m} b_t: solve descending.
  CycleShape shape;
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    i64 t = *it;
    i64 b = mult[t];
    for (i64 u : divs)
      if (u > t && u % t == 0 && shape.exponents.count(u)) b -= shape.exponents[u];
    if (b != 0) shape.exponents[t] = b;
  }
  // Exact verification: the product of (x^t - 1)^{b_t} must reproduce the
  // characteristic polynomial (negative exponents cross-multiplied).
  std::vector<Rat> lhs = char_poly(iso.matrix);
  std::vector<Rat> rhs{Rat(1)};
  for (auto [t, b] : shape.exponents) {
    if (b > 0) rhs = poly_mul(rhs, cyclotomic_power(t, b));
    else lhs = poly_mul(lhs, cyclotomic_power(t, -b));
  }
  if (lhs != rhs) throw std::domain_error("cycle_shape_of: not quasirational");
  return shape;
}

MatI fixed_lattice_rows(const LatticeIsometry& iso) {
  MatI m(24, 24);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) m(i, j) = Int(iso.matrix(i, j) - (i == j ? 1 : 0));
  return left_kernel_saturated(m);
}

IntegerLattice fixed_lattice(const LatticeIsometry& iso) {
  const IntegerLattice& leech = build_leech();
  MatI k = fixed_lattice_rows(iso);
  IntegerLattice lat;
  lat.form = leech.form;
  lat.basis = to_matq(k) * leech.basis;
  return lat;
}

IntegerLattice projection_lattice(const LatticeIsometry& iso) {
  const IntegerLattice& leech = build_leech();
  MatQ pi = MatQ::Zero(24, 24);
  MatL acc = MatL::Identity(24, 24);
  for (i64 i = 0; i < iso.order; ++i) {
    pi += to_matq(acc);
    acc = (acc * iso.matrix).eval();
  }
  pi *= Rat(1, iso.order);
  MatQ rows = lattice_row_basis(pi);  // spans pi(Lambda) in basis coordinates
  IntegerLattice lat;
  lat.form = leech.form;
  lat.basis = rows * leech.basis;
  return lat;
}

Int quotient_order(const LatticeIsometry& iso, i64 n) {
  if (n < 1) throw std::invalid_argument("quotient_order: n must be positive");
  IntegerLattice fixed = fixed_lattice(iso);
  Eigen::Index rk = fixed.rank();
  if (rk == 0) return Int(1);
  Rat disc = det_q(fixed.gram());
  Rat val(1);
  for (Eigen::Index i = 0; i < rk; ++i) val *= Rat(n);
  val /= disc;
  if (!val.is_integer()) throw std::domain_error("quotient_order: non-integral result");
  return val.num();
}

bool order_doubling(const LatticeIsometry& iso) {
  if (iso.order % 2 != 0) return false;
  MatL half = mat_power(iso.matrix, iso.order / 2);
  MatQ g = leech_gram();
  MatQ gn = g * to_matq(half).transpose();
  for (int i = 0; i < 24; ++i) {
    if (!gn(i, i).is_integer()) throw std::logic_error("order_doubling: non-integral pairing");
    if (gn(i, i).num().is_odd()) return true;
  }
  return false;
}

VecQ doubling_vector(const LatticeIsometry& iso) {
  if (!order_doubling(iso)) return VecQ::Zero(24);
  i64 m = iso.order;
  MatL half = mat_power(iso.matrix, m / 2);
  MatQ g = leech_gram();
  MatQ gn = g * to_matq(half).transpose();
  std::vector<int> parity(24);
  for (int i = 0; i < 24; ++i) parity[static_cast<size_t>(i)] = gn(i, i).num().is_odd() ? 1 : 0;

  MatI kern = fixed_lattice_rows(iso);  // rows: basis of Lambda^nu in basis coords
  Eigen::Index r = kern.rows();
  // Solve u * (K G) = parity (mod 2) for u in F_2^r.
  MatQ kg = to_matq(kern) * g;
  std::vector<std::vector<int>> a(static_cast<size_t>(r), std::vector<int>(24));
  for (Eigen::Index i = 0; i < r; ++i)
    for (int j = 0; j < 24; ++j) {
      if (!kg(i, j).is_integer()) throw std::logic_error("doubling_vector: non-integral pairing");
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = kg(i, j).num().is_odd() ? 1 : 0;
    }
  // Gaussian elimination over F_2 on the transposed system.
  // Unknown row vector u (length r), equations indexed by columns j.
  std::vector<uint64_t> rowsF2(static_cast<size_t>(24), 0);  // equations as bitsets over u plus rhs bit 63
  for (int j = 0; j < 24; ++j) {
    uint64_t bits = 0;
    for (Eigen::Index i = 0; i < r; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(j)]) bits |= (1ull << i);
    if (parity[static_cast<size_t>(j)]) bits |= (1ull << 63);
    rowsF2[static_cast<size_t>(j)] = bits;
  }
  std::vector<int> pivot_of_row;
  std::vector<uint64_t> reduced;
  for (auto eq : rowsF2) {
    for (size_t k = 0; k < reduced.size(); ++k)
      if (eq & (1ull << pivot_of_row[k])) eq ^= reduced[k];
    if (eq & ~(1ull << 63)) {
      int p = std::countr_zero(eq & ~(1ull << 63));
      pivot_of_row.push_back(p);
      reduced.push_back(eq);
    } else if (eq) {
      throw std::domain_error("doubling_vector: no solution");
    }
  }
  // Particular solution.
  std::vector<int> u0(static_cast<size_t>(r), 0);
  for (size_t k = reduced.size(); k-- > 0;) {
    uint64_t eq = reduced[k];
    int p = pivot_of_row[k];
    int rhs = (eq >> 63) & 1;
    for (Eigen::Index i = 0; i < r; ++i)
      if (i != p && (eq & (1ull << i))) rhs ^= u0[static_cast<size_t>(i)];
    u0[static_cast<size_t>(p)] = rhs;
  }
  // Kernel basis of the F_2 system.
  std::vector<std::vector<int>> kernelF2;
  std::vector<bool> is_pivot(static_cast<size_t>(r), false);
  for (int p : pivot_of_row) is_pivot[static_cast<size_t>(p)] = true;
  for (Eigen::Index free = 0; free < r; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<int> v(static_cast<size_t>(r), 0);
    v[static_cast<size_t>(free)] = 1;
    for (size_t k = reduced.size(); k-- > 0;) {
      uint64_t eq = reduced[k];
      int p = pivot_of_row[k];
      int val = 0;
      for (Eigen::Index i = 0; i < r; ++i)
        if (i != p && (eq & (1ull << i))) val ^= v[static_cast<size_t>(i)];
      v[static_cast<size_t>(p)] = val;
    }
    kernelF2.push_back(v);
  }
  if (kernelF2.size() > 14)
    throw std::domain_error("doubling_vector: solution space too large to canonicalise");

  // Minimise the norm of s = u K B / (2m) over all solutions u0 + kernel
  // combinations (mod 2), each coset searched exactly by CVP on 2 Lambda^nu.
  MatQ gram_fixed = to_matq(kern) * g * to_matq(kern).transpose();
  Rat best_norm(-1);
  VecQ best_u;
  size_t combos = 1u << kernelF2.size();
  for (size_t mask = 0; mask < combos; ++mask) {
    std::vector<int> u = u0;
    for (size_t b = 0; b < kernelF2.size(); ++b)
      if (mask & (1u << b))
        for (Eigen::Index i = 0; i < r; ++i)
          u[static_cast<size_t>(i)] ^= kernelF2[b][static_cast<size_t>(i)];
    // Minimise (u + 2z) G_f (u + 2z)^T = 4 (z + u/2) G_f (z + u/2)^T.
    VecQ offset(r);
    for (Eigen::Index i = 0; i < r; ++i) offset(i) = Rat(u[static_cast<size_t>(i)], 2);
    auto cv = min_coset_norm_gram(gram_fixed, offset, true);
    Rat norm = Rat(4) * cv.norm;
    VecQ w = Rat(2) * cv.witness_coords;  // u + 2z, fixed-lattice coordinates
    if (best_norm.sign() < 0 || norm < best_norm) {
      best_norm = norm;
      best_u = w;
    } else if (norm == best_norm) {
      for (Eigen::Index i = 0; i < r; ++i) {
        if (w(i) == best_u(i)) continue;
        if (w(i) < best_u(i)) best_u = w;
        break;
      }
    }
  }
  VecQ s = ((best_u.transpose() * to_matq(kern)) / Rat(2 * m)).transpose();
  return s;  // basis coordinates of Lambda, scaled by 1/(2m)
}

i64 automorphism_order(const LeechAutomorphism& a) {
  VecQ s = doubling_vector(a.iso);
  VecQ f = a.shift - s;
  // f must lie in the fixed subspace.
  MatQ mi = to_matq(a.iso.matrix) - MatQ::Identity(24, 24);
  RowQ residue = f.transpose() * mi;
  for (int i = 0; i < 24; ++i)
    if (!residue(i).is_zero())
      throw std::invalid_argument("automorphism_order: shift not in the fixed subspace");
  i64 k = 1;
  for (int i = 0; i < 24; ++i) k = lcm_i64(k, f(i).den().to_i64());
  return lcm_i64(a.iso.order, k);
}

Rat twisted_weight(const LeechAutomorphism& a) {
  CycleShape shape = cycle_shape_of(a.iso);
  Rat anomaly = vacuum_anomaly(shape);
  MatQ mi = to_matq(a.iso.matrix) - MatQ::Identity(24, 24);
  RowQ residue = a.shift.transpose() * mi;
  for (int i = 0; i < 24; ++i)
    if (!residue(i).is_zero())
      throw std::invalid_argument("twisted_weight: shift not in the fixed subspace");
  IntegerLattice proj = projection_lattice(a.iso);
  if (proj.rank() == 0) {
    for (int i = 0; i < 24; ++i)
      if (!a.shift(i).is_zero())
        throw std::invalid_argument("twisted_weight: nonzero shift with rank-0 fixed space");
    return anomaly;
  }
  const IntegerLattice& leech = build_leech();
  CosetVector coset{proj, (a.shift.transpose() * leech.basis).transpose()};
  auto min = min_coset_norm(coset);
  return anomaly + min.norm / Rat(2);
}

i64 type_of_automorphism(const LeechAutomorphism& a, i64 n) {
  if (automorphism_order(a) != n)
    throw std::invalid_argument("type_of_automorphism: order mismatch");
  return automorphism_type(n, twisted_weight(a));
}

LeechAutomorphism power(const LeechAutomorphism& a, i64 i) {
  if (i < 1) throw std::invalid_argument("power: exponent must be positive");
  LeechAutomorphism p;
  p.iso = make_isometry(mat_power(a.iso.matrix, i), a.iso.name);
  p.shift = a.shift * Rat(i);
  return p;
}

LatticeIsometry load_isometry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_isometry: cannot open " + path);
  nlohmann::json j;
  in >> j;
  MatL m(24, 24);
  const auto& rows = j.at("matrix");
  if (rows.size() != 24) throw std::runtime_error("load_isometry: need 24 rows");
  for (int i = 0; i < 24; ++i) {
    if (rows[static_cast<size_t>(i)].size() != 24)
      throw std::runtime_error("load_isometry: need 24 columns");
    for (int k = 0; k < 24; ++k) m(i, k) = rows[static_cast<size_t>(i)][static_cast<size_t>(k)].get<i64>();
  }
  return make_isometry(std::move(m), j.value("name", ""));
}

}  // namespace gdhkit
