#include "gdhkit/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace gdhkit {

IntegerLattice IntegerLattice::from_basis(MatQ basis, Rat form_scale) {
  IntegerLattice lat;
  lat.form = MatQ::Identity(basis.cols(), basis.cols()) * form_scale;
  lat.basis = std::move(basis);
  return lat;
}

IntegerLattice IntegerLattice::from_gram(MatQ gram) {
  IntegerLattice lat;
  lat.basis = MatQ::Identity(gram.rows(), gram.rows());
  lat.form = std::move(gram);
  return lat;
}

MatQ IntegerLattice::gram() const { return basis * form * basis.transpose(); }

HnfResult hnf(const MatI& m) {
  Eigen::Index rows = m.rows(), cols = m.cols();
  MatI w = m;
  MatI u = MatI::Identity(rows, rows);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    // Euclidean elimination below the working row.
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      while (!w(i, col).is_zero()) {
        if (w(row, col).is_zero()) {
          w.row(row).swap(w.row(i));
          u.row(row).swap(u.row(i));
          break;
        }
        Int q = w(row, col) / w(i, col);  // truncated
        w.row(row) -= w.row(i) * q;
        u.row(row) -= u.row(i) * q;
        w.row(row).swap(w.row(i));
        u.row(row).swap(u.row(i));
      }
    }
    if (w(row, col).is_zero()) continue;
    if (w(row, col).sign() < 0) {
      w.row(row) = -w.row(row);
      u.row(row) = -u.row(row);
    }
    for (Eigen::Index i = 0; i < row; ++i) {
      Int q = floor_div(w(i, col), w(row, col));
      if (!q.is_zero()) {
        w.row(i) -= w.row(row) * q;
        u.row(i) -= u.row(row) * q;
      }
    }
    ++row;
  }
  return {std::move(w), std::move(u)};
}

SnfResult snf(const MatI& m) {
  Eigen::Index rows = m.rows(), cols = m.cols();
  MatI s = m;
  MatI u = MatI::Identity(rows, rows);
  MatI v = MatI::Identity(cols, cols);

  auto nonzero_below = [&](Eigen::Index t) -> std::optional<std::pair<Eigen::Index, Eigen::Index>> {
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (!s(i, j).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
  };

  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    auto piv = nonzero_below(t);
    if (!piv) break;
    s.row(t).swap(s.row(piv->first));
    u.row(t).swap(u.row(piv->first));
    s.col(t).swap(s.col(piv->second));
    v.col(t).swap(v.col(piv->second));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        while (!s(i, t).is_zero()) {
          Int q = s(t, t).is_zero() ? Int(0) : s(i, t) / s(t, t);
          s.row(i) -= s.row(t) * q;
          u.row(i) -= u.row(t) * q;
          if (!s(i, t).is_zero()) {
            s.row(t).swap(s.row(i));
            u.row(t).swap(u.row(i));
          }
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        while (!s(t, j).is_zero()) {
          Int q = s(t, t).is_zero() ? Int(0) : s(t, j) / s(t, t);
          s.col(j) -= s.col(t) * q;
          v.col(j) -= v.col(t) * q;
          if (!s(t, j).is_zero()) {
            s.col(t).swap(s.col(j));
            v.col(t).swap(v.col(j));
            clean = false;  // the row may be dirty again
          }
        }
      }
    }
    // Divisibility: s(t,t) must divide every later entry.
    bool redo = false;
    for (Eigen::Index i = t + 1; i < rows && !redo; ++i)
      for (Eigen::Index j = t + 1; j < cols && !redo; ++j)
        if (!(s(i, j) % s(t, t)).is_zero()) {
          s.row(t) += s.row(i);
          u.row(t) += u.row(i);
          redo = true;
        }
    if (redo) continue;
    if (s(t, t).sign() < 0) {
      s.row(t) = -s.row(t);
      u.row(t) = -u.row(t);
    }
    ++t;
  }
  return {std::move(s), std::move(u), std::move(v)};
}

MatI left_kernel_saturated(const MatI& m) {
  auto res = hnf(m);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < res.h.rows(); ++i) {
    bool zero = true;
    for (Eigen::Index j = 0; j < res.h.cols(); ++j)
      if (!res.h(i, j).is_zero()) { zero = false; break; }
    if (!zero) ++rank;
  }
  MatI kern(res.h.rows() - rank, m.rows());
  Eigen::Index out = 0;
  for (Eigen::Index i = 0; i < res.h.rows(); ++i) {
    bool zero = true;
    for (Eigen::Index j = 0; j < res.h.cols(); ++j)
      if (!res.h(i, j).is_zero()) { zero = false; break; }
    if (zero) kern.row(out++) = res.u.row(i);
  }
  return kern;
}

MatQ lattice_row_basis(const MatQ& rows) {
  Int den(1);
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    for (Eigen::Index j = 0; j < rows.cols(); ++j) den = lcm(den, rows(i, j).den());
  MatI z(rows.rows(), rows.cols());
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    for (Eigen::Index j = 0; j < rows.cols(); ++j)
      z(i, j) = (rows(i, j) * Rat(den)).num();
  auto res = hnf(z);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < res.h.rows(); ++i)
    for (Eigen::Index j = 0; j < res.h.cols(); ++j)
      if (!res.h(i, j).is_zero()) { rank = i + 1; break; }
  MatQ basis(rank, rows.cols());
  for (Eigen::Index i = 0; i < rank; ++i)
    for (Eigen::Index j = 0; j < rows.cols(); ++j)
      basis(i, j) = Rat(res.h(i, j), den);
  return basis;
}

DualResult dual_and_discriminant(const IntegerLattice& lat) {
  MatQ g = lat.gram();
  Rat disc = det_q(g);
  if (disc.is_zero()) throw std::invalid_argument("dual_and_discriminant: degenerate gram");
  MatQ dual = inverse_q(g) * lat.basis;
  return {std::move(dual), disc, disc.is_integer()};
}

namespace {

Rat round_rat(const Rat& x) { return Rat(floor_rat(x + Rat(1, 2))); }

}  // namespace

LllResult lll_reduce_gram(const MatQ& gram) {
  Eigen::Index n = gram.rows();
  MatQ g = gram;
  MatI u = MatI::Identity(n, n);

  auto row_op = [&](Eigen::Index dst, Eigen::Index src, const Int& q) {
    // basis_dst -= q * basis_src
    Rat qr(q);
    for (Eigen::Index j = 0; j < n; ++j) g(dst, j) -= qr * g(src, j);
    for (Eigen::Index j = 0; j < n; ++j) g(j, dst) -= qr * g(j, src);
    u.row(dst) -= u.row(src) * q;
  };
  auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
    g.row(a).swap(g.row(b));
    g.col(a).swap(g.col(b));
    u.row(a).swap(u.row(b));
  };

  // Gram-Schmidt data recomputed from g.
  std::vector<Rat> bstar(n);
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  auto gso = [&]() {
    for (Eigen::Index i = 0; i < n; ++i) {
      bstar[i] = g(i, i);
      for (Eigen::Index j = 0; j < i; ++j) {
        Rat m = g(i, j);
        for (Eigen::Index k = 0; k < j; ++k) m -= mu[j][k] * mu[i][k] * bstar[k];
        mu[i][j] = m / bstar[j];
        bstar[i] -= mu[i][j] * mu[i][j] * bstar[j];
      }
    }
  };

  const Rat delta(3, 4);
  gso();
  Eigen::Index k = 1;
  while (k < n) {
    for (Eigen::Index j = k - 1; j >= 0; --j) {
      Rat q = round_rat(mu[k][j]);
      if (!q.is_zero()) {
        row_op(k, j, q.num());
        gso();
      }
    }
    if (bstar[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      ++k;
    } else {
      swap_rows(k, k - 1);
      gso();
      k = std::max<Eigen::Index>(k - 1, 1);
    }
  }
  return {std::move(g), std::move(u)};
}

namespace {

// Triangular decomposition Q(y) = sum_i q[i][i] (y_i + sum_{j>i} q[i][j] y_j)^2.
std::vector<std::vector<Rat>> fp_decompose(const MatQ& gram) {
  Eigen::Index n = gram.rows();
  std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) q[i][j] = gram(i, j);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (q[i][i].sign() <= 0)
      throw std::invalid_argument("fp_decompose: gram not positive definite");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];  // original value, used in the update below
      q[i][j] = q[i][j] / q[i][i];
    }
    for (Eigen::Index j = i + 1; j < n; ++j)
      for (Eigen::Index k = j; k < n; ++k) q[j][k] -= q[j][i] * q[i][k];
  }
  return q;
}

Int isqrt_floor(const Int& x) {
  if (x.sign() < 0) throw std::domain_error("isqrt_floor: negative");
  return Int(bmp::sqrt(x.raw()));
}

// Integer solutions of (x - center)^2 <= radius_sq.
std::optional<std::pair<i64, i64>> int_interval(const Rat& center, const Rat& radius_sq) {
  if (radius_sq.sign() < 0) return std::nullopt;
  Int cnum = center.num(), cden = center.den();
  // y = x*cden - cnum must satisfy y^2 <= radius_sq * cden^2.
  Rat scaled = radius_sq * Rat(cden) * Rat(cden);
  Int ymax = isqrt_floor(floor_div(scaled.num(), scaled.den()));
  Int lo = -floor_div(-(cnum - ymax), cden);  // ceil((cnum - ymax)/cden)
  Int hi = floor_div(cnum + ymax, cden);
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo.to_i64(), hi.to_i64());
}

struct FpSearch {
  const std::vector<std::vector<Rat>>& q;
  Eigen::Index n;
  const std::vector<Rat>& offset;  // c_i
  bool positive_only;              // fold +-v (requires zero offset)
  const std::atomic<bool>* cancel;

  std::vector<Rat> y;  // y_i = x_i + c_i for fixed levels
  std::vector<i64> x;
  std::vector<ShortVector>* out = nullptr;  // fixed-bound mode
  Rat bound;

  // CVP mode: shrink the bound as better vectors appear.
  bool cvp = false;
  Rat best_norm;
  std::vector<i64> best_x;

  // Restrict the topmost coordinate to [top_lo, top_hi] (thread sharding).
  i64 top_lo = std::numeric_limits<i64>::min();
  i64 top_hi = std::numeric_limits<i64>::max();

  // `used` is the exact norm contribution of the levels above `level`.
  void run(Eigen::Index level, const Rat& used, bool higher_all_zero) {
    if (cancel && cancel->load()) return;
    if (level < 0) {
      if (cvp) {
        if (used < best_norm) {
          best_norm = used;
          best_x = x;
          bound = used;
        }
        return;
      }
      if (higher_all_zero) return;  // the zero vector
      out->push_back({VecL::Zero(n), used});
      for (Eigen::Index i = 0; i < n; ++i) out->back().coords(i) = x[static_cast<size_t>(i)];
      return;
    }
    Rat u(0);
    for (Eigen::Index j = level + 1; j < n; ++j)
      u += q[level][j] * y[static_cast<size_t>(j)];
    // q_ii (x + c + u)^2 <= bound - used
    Rat center = -offset[static_cast<size_t>(level)] - u;
    auto iv = int_interval(center, (bound - used) / q[level][level]);
    if (!iv) return;
    i64 lo = iv->first, hi = iv->second;
    if (level == n - 1) {
      lo = std::max(lo, top_lo);
      hi = std::min(hi, top_hi);
    }
    if (positive_only && higher_all_zero) lo = std::max<i64>(lo, 0);
    for (i64 v = lo; v <= hi; ++v) {
      x[static_cast<size_t>(level)] = v;
      Rat yv = Rat(v) + offset[static_cast<size_t>(level)];
      y[static_cast<size_t>(level)] = yv;
      Rat term = q[level][level] * (yv + u) * (yv + u);
      if (term > bound - used) continue;  // the CVP bound may have shrunk
      run(level - 1, used + term, higher_all_zero && v == 0);
    }
  }
};

std::vector<ShortVector> enumerate_fixed(const MatQ& gram, const Rat& bound,
                                         const EnumerationOptions& opts) {
  Eigen::Index n = gram.rows();
  std::vector<ShortVector> result;
  if (n == 0) return result;
  auto q = fp_decompose(gram);
  std::vector<Rat> offset(static_cast<size_t>(n), Rat(0));

  auto run_range = [&](i64 lo, i64 hi, std::vector<ShortVector>& sink) {
    FpSearch s{q, n, offset, true, opts.cancel, {}, {}, &sink, bound};
    s.y.assign(static_cast<size_t>(n), Rat(0));
    s.x.assign(static_cast<size_t>(n), 0);
    s.top_lo = lo;
    s.top_hi = hi;
    s.run(n - 1, Rat(0), true);
  };

  if (opts.threads <= 1) {
    run_range(0, std::numeric_limits<i64>::max(), result);
  } else {
    auto iv = int_interval(Rat(0), bound / q[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)]);
    if (iv) {
      i64 lo = std::max<i64>(iv->first, 0), hi = iv->second;
      int nt = std::max(1, std::min<int>(opts.threads, static_cast<int>(hi - lo + 1)));
      std::vector<std::vector<ShortVector>> parts(static_cast<size_t>(nt));
      std::vector<std::thread> threads;
      for (int t = 0; t < nt; ++t) {
        threads.emplace_back([&, t]() {
          // Round-robin over top-level values keeps the workload balanced.
          for (i64 v = lo + t; v <= hi; v += nt)
            run_range(v, v, parts[static_cast<size_t>(t)]);
        });
      }
      for (auto& th : threads) th.join();
      for (auto& p : parts)
        result.insert(result.end(), p.begin(), p.end());
    }
  }

  if (opts.include_sign_pairs) {
    size_t m = result.size();
    result.reserve(2 * m);
    for (size_t i = 0; i < m; ++i) result.push_back({-result[i].coords, result[i].norm});
  }
  auto lex_less = [](const ShortVector& a, const ShortVector& b) {
    for (Eigen::Index i = 0; i < a.coords.size(); ++i) {
      if (a.coords(i) != b.coords(i)) return a.coords(i) < b.coords(i);
    }
    return false;
  };
  std::sort(result.begin(), result.end(), lex_less);
  return result;
}

}  // namespace

std::vector<ShortVector> short_vectors(const MatQ& gram, const Rat& bound,
                                       const EnumerationOptions& opts) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("short_vectors: non-square gram");
  if (bound.sign() < 0) return {};
  Eigen::Index n = gram.rows();
  if (n == 0) return {};

  MatQ work = gram;
  MatI u;
  bool reduced = false;
  if (opts.use_lll && n > 1) {
    auto red = lll_reduce_gram(gram);
    work = red.gram;
    u = red.u;
    reduced = true;
  }
  auto vecs = enumerate_fixed(work, bound, opts);
  if (reduced) {
    // coords are w.r.t. the reduced basis U * B; convert back.
    MatL ul = to_matl(u);
    for (auto& v : vecs) v.coords = (v.coords.transpose() * ul).transpose();
  }
  if (!opts.include_sign_pairs) {
    // Canonical sign: last nonzero coordinate positive, independent of the
    // basis the enumeration ran in.
    for (auto& v : vecs) {
      for (Eigen::Index i = v.coords.size(); i-- > 0;) {
        if (v.coords(i) == 0) continue;
        if (v.coords(i) < 0) v.coords = -v.coords;
        break;
      }
    }
  }
  auto lex_less = [](const ShortVector& a, const ShortVector& b) {
    for (Eigen::Index i = 0; i < a.coords.size(); ++i)
      if (a.coords(i) != b.coords(i)) return a.coords(i) < b.coords(i);
    return false;
  };
  std::sort(vecs.begin(), vecs.end(), lex_less);
  return vecs;
}

std::vector<ShortVector> short_vectors(const IntegerLattice& lat, const Rat& bound,
                                       const EnumerationOptions& opts) {
  return short_vectors(lat.gram(), bound, opts);
}

CvpResult min_coset_norm_gram(const MatQ& gram, const VecQ& offset_coords, bool use_lll) {
  Eigen::Index n = gram.rows();
  if (n == 0) return {Rat(0), VecQ()};

  MatQ work = gram;
  VecQ c = offset_coords;
  MatL ul;
  bool reduced = false;
  if (use_lll && n > 1) {
    auto red = lll_reduce_gram(gram);
    work = red.gram;
    ul = to_matl(red.u);
    // offset in reduced coordinates: c' * (U B) spans the same coset if
    // c' = c * U^{-1}.
    MatQ uinv = inverse_q(to_matq(to_mati(ul)));
    c = (offset_coords.transpose() * uinv).transpose();
    reduced = true;
  }

  auto q = fp_decompose(work);
  std::vector<Rat> offset(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) offset[static_cast<size_t>(i)] = c(i);

  // Initial bound: the rounded offset.
  VecQ y0(n);
  for (Eigen::Index i = 0; i < n; ++i) y0(i) = c(i) - round_rat(c(i));
  Rat init(0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) init += y0(i) * work(i, j) * y0(j);

  FpSearch s{q, n, offset, false, nullptr, {}, {}, nullptr, init};
  s.cvp = true;
  s.y.assign(static_cast<size_t>(n), Rat(0));
  s.x.assign(static_cast<size_t>(n), 0);
  s.best_norm = init;
  s.best_x.assign(static_cast<size_t>(n), 0);
  for (Eigen::Index i = 0; i < n; ++i) s.best_x[static_cast<size_t>(i)] = (-round_rat(c(i))).num().to_i64();
  s.run(n - 1, Rat(0), true);

  VecQ witness(n);
  for (Eigen::Index i = 0; i < n; ++i)
    witness(i) = Rat(s.best_x[static_cast<size_t>(i)]) + c(i);
  if (reduced) {
    // Back to original coordinates: y' (U B) = (y' U) B.
    witness = (witness.transpose() * to_matq(to_mati(ul))).transpose();
  }
  return {s.best_norm, witness};
}

CosetMinimum min_coset_norm(const CosetVector& coset) {
  const IntegerLattice& lat = coset.lattice;
  Eigen::Index amb = lat.form.rows();
  if (coset.offset.size() != amb)
    throw std::invalid_argument("min_coset_norm: offset dimension mismatch");
  if (lat.rank() == 0) {
    Rat norm = (coset.offset.transpose() * lat.form * coset.offset)(0, 0);
    return {norm, coset.offset};
  }
  auto solved = solve_right_q(lat.basis.transpose(), coset.offset);
  if (!solved)
    throw std::invalid_argument("min_coset_norm: offset not in the span of the lattice");
  auto res = min_coset_norm_gram(lat.gram(), *solved, true);
  VecQ witness = (res.witness_coords.transpose() * lat.basis).transpose();
  return {res.norm, witness};
}

}  // namespace gdhkit
