#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdhkit/lattice.hpp"
#include "gdhkit/rootsys.hpp"

#include <random>

using namespace gdhkit;

namespace {

MatI mi(std::vector<std::vector<i64>> rows) {
  MatI m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Int(rows[i][j]);
  return m;
}

MatQ mq(std::vector<std::vector<i64>> rows) {
  MatQ m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Rat(rows[i][j]);
  return m;
}

bool unimodular(const MatI& u) {
  Int d = det_i(u);
  return d == Int(1) || d == Int(-1);
}

// Gcd of all k x k minors: the k-th determinantal divisor.
Int determinantal_divisor(const MatI& m, int k) {
  std::vector<int> rows(static_cast<size_t>(m.rows()));
  std::vector<int> cols(static_cast<size_t>(m.cols()));
  Int g(0);
  std::vector<int> ridx(static_cast<size_t>(k)), cidx(static_cast<size_t>(k));
  std::function<void(int, int)> pick_cols = [&](int start, int depth) {
    if (depth == k) {
      MatI sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          sub(i, j) = m(ridx[static_cast<size_t>(i)], cidx[static_cast<size_t>(j)]);
      g = gcd(g, det_i(sub));
      return;
    }
    for (int c = start; c < m.cols(); ++c) {
      cidx[static_cast<size_t>(depth)] = c;
      pick_cols(c + 1, depth + 1);
    }
  };
  std::function<void(int, int)> pick_rows = [&](int start, int depth) {
    if (depth == k) {
      pick_cols(0, 0);
      return;
    }
    for (int r = start; r < m.rows(); ++r) {
      ridx[static_cast<size_t>(depth)] = r;
      pick_rows(r + 1, depth + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

}  // namespace

TEST_CASE("hnf basics") {
  MatI id = MatI::Identity(3, 3);
  auto r = hnf(id);
  CHECK(mat_eq(r.h, id));
  CHECK(unimodular(r.u));

  MatI m = mi({{2, 4}, {6, 8}});
  auto r2 = hnf(m);
  CHECK(mat_eq(MatI(r2.u * m), r2.h));
  CHECK(unimodular(r2.u));

  // Zero row: rank drop handled.
  MatI m3 = mi({{1, 2}, {2, 4}});
  auto r3 = hnf(m3);
  CHECK(r3.h(1, 0).is_zero());
  CHECK(r3.h(1, 1).is_zero());
  CHECK(mat_eq(MatI(r3.u * m3), r3.h));
}

TEST_CASE("snf with elementary divisor oracle") {
  MatI m = mi({{2, 4}, {6, 8}});
  auto r = snf(m);
  CHECK(mat_eq(MatI(r.u * m * r.v), r.s));
  CHECK(unimodular(r.u));
  CHECK(unimodular(r.v));
  CHECK(r.s(0, 0) == Int(2));
  CHECK(r.s(1, 1) == Int(4));

  // Random matrices against the determinantal-divisor oracle.
  std::mt19937 rng(7);
  std::uniform_int_distribution<i64> entry(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 2 + static_cast<int>(rng() % 3);
    int cols = 2 + static_cast<int>(rng() % 3);
    MatI a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a(i, j) = Int(entry(rng));
    auto s = snf(a);
    CHECK(mat_eq(MatI(s.u * a * s.v), s.s));
    CHECK(unimodular(s.u));
    CHECK(unimodular(s.v));
    int mind = std::min(rows, cols);
    Int prev(1);
    for (int k = 1; k <= mind; ++k) {
      Int dk = determinantal_divisor(a, k);
      Int diag = s.s(k - 1, k - 1);
      if (dk.is_zero()) {
        CHECK(diag.is_zero());
        break;
      }
      CHECK(diag == dk / prev);
      prev = dk;
    }
    // Divisibility chain.
    for (int k = 0; k + 1 < mind; ++k)
      if (!s.s(k + 1, k + 1).is_zero())
        CHECK((s.s(k + 1, k + 1) % (s.s(k, k).is_zero() ? Int(1) : s.s(k, k))).is_zero());
  }
}

TEST_CASE("kernel lattice") {
  // nu = -I on Z^2: kernel of nu - I is trivial.
  MatI m = mi({{-2, 0}, {0, -2}});
  CHECK(left_kernel_saturated(m).rows() == 0);

  MatI zero = MatI::Zero(2, 2);
  CHECK(left_kernel_saturated(zero).rows() == 2);

  // M = [[1], [-1]]: x (1,-1)^T = 0 -> span{(1,1)}.
  MatI m2 = mi({{1}, {-1}});
  auto k = left_kernel_saturated(m2);
  REQUIRE(k.rows() == 1);
  CHECK(abs(k(0, 0)) == Int(1));
  CHECK(k(0, 0) == k(0, 1));

  // Saturation: kernel of [[2, 0], [0, 0]] mapping x -> x M... rows (0,1).
  MatI m3 = mi({{2, 0}, {0, 0}});
  auto k3 = left_kernel_saturated(m3);
  REQUIRE(k3.rows() == 1);
  CHECK(abs(k3(0, 1)) == Int(1));
}

TEST_CASE("dual and discriminant") {
  auto z2 = IntegerLattice::from_basis(mq({{1, 0}, {0, 1}}), Rat(1));
  auto d = dual_and_discriminant(z2);
  CHECK(d.discriminant == Rat(1));
  CHECK(d.integral);

  auto a1 = IntegerLattice::from_gram(mq({{2}}));
  CHECK(dual_and_discriminant(a1).discriminant == Rat(2));

  auto scaled = IntegerLattice::from_basis(mq({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}),
                                           Rat(1, 2));
  CHECK(dual_and_discriminant(scaled).discriminant == Rat(16));

  // Dual basis pairing: D * form * B^T = I.
  const RootSystem& a2 = generate_roots(SimpleLieType::parse("A2"));
  auto lat = IntegerLattice::from_gram(a2.bilinear);
  auto dd = dual_and_discriminant(lat);
  CHECK(dd.discriminant == Rat(3));
  MatQ prod = dd.dual_basis * lat.form * lat.basis.transpose();
  CHECK(mat_eq(prod, MatQ(MatQ::Identity(2, 2))));
}

TEST_CASE("short vectors on Z^n against box enumeration") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 4; ++n) {
    for (i64 bound : {1, 4, 9}) {
      MatQ gram = MatQ::Identity(n, n);
      auto vecs = short_vectors(gram, Rat(bound));
      // Box oracle: count vectors with |x|^2 <= bound up to sign.
      i64 count = 0;
      std::vector<i64> x(static_cast<size_t>(n), 0);
      i64 radius = 3;
      std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
          i64 norm = 0;
          bool nonzero = false;
          for (i64 v : x) { norm += v * v; nonzero |= v != 0; }
          if (!nonzero || norm > bound) return;
          // canonical: last nonzero positive
          for (int i = n; i-- > 0;) {
            if (x[static_cast<size_t>(i)] != 0) {
              if (x[static_cast<size_t>(i)] > 0) ++count;
              return;
            }
          }
          return;
        }
        for (i64 v = -radius; v <= radius; ++v) {
          x[static_cast<size_t>(pos)] = v;
          rec(pos + 1);
        }
      };
      rec(0);
      CHECK(static_cast<i64>(vecs.size()) == count);
      for (const auto& v : vecs) {
        Rat norm(0);
        for (int i = 0; i < n; ++i) norm += Rat(v.coords(i) * v.coords(i));
        CHECK(norm == v.norm);
        CHECK(norm <= Rat(bound));
      }
    }
  }
}

TEST_CASE("E8 has 120 roots up to sign") {
  const RootSystem& e8 = generate_roots(SimpleLieType::parse("E8"));
  auto vecs = short_vectors(e8.bilinear, Rat(2));
  CHECK(vecs.size() == 120);
  EnumerationOptions both;
  both.include_sign_pairs = true;
  CHECK(short_vectors(e8.bilinear, Rat(2), both).size() == 240);
  // LLL is only an accelerator.
  EnumerationOptions plain;
  plain.use_lll = false;
  auto vecs2 = short_vectors(e8.bilinear, Rat(2), plain);
  REQUIRE(vecs.size() == vecs2.size());
  for (size_t i = 0; i < vecs.size(); ++i) {
    CHECK(mat_eq(vecs[i].coords, vecs2[i].coords));
    CHECK(vecs[i].norm == vecs2[i].norm);
  }
  // Threaded enumeration merges identically.
  EnumerationOptions threaded;
  threaded.threads = 4;
  auto vecs3 = short_vectors(e8.bilinear, Rat(2), threaded);
  REQUIRE(vecs3.size() == vecs.size());
  for (size_t i = 0; i < vecs.size(); ++i) CHECK(mat_eq(vecs[i].coords, vecs3[i].coords));
}

TEST_CASE("min coset norm") {
  auto z2 = IntegerLattice::from_basis(mq({{1, 0}, {0, 1}}), Rat(1));
  VecQ half(2);
  half << Rat(1, 2), Rat(1, 2);
  auto r = min_coset_norm({z2, half});
  CHECK(r.norm == Rat(1, 2));

  VecQ inside(2);
  inside << Rat(3), Rat(-2);
  CHECK(min_coset_norm({z2, inside}).norm == Rat(0));
}

TEST_CASE("min coset norm against brute force on random lattices") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<i64> entry(-3, 3);
  std::uniform_int_distribution<i64> num(-6, 6);
  int done = 0;
  while (done < 30) {
    int n = 2 + static_cast<int>(rng() % 3);
    MatQ basis(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) basis(i, j) = Rat(entry(rng));
    if (det_q(basis).is_zero()) continue;
    ++done;
    auto lat = IntegerLattice::from_basis(basis, Rat(1));
    VecQ offs(n);
    for (int i = 0; i < n; ++i) offs(i) = Rat(num(rng), 6);
    VecQ ambient = (offs.transpose() * basis).transpose();
    auto got = min_coset_norm({lat, ambient});

    // brute force over a box
    MatQ gram = lat.gram();
    Rat best(-1);
    std::vector<i64> x(static_cast<size_t>(n), 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n) {
        VecQ y(n);
        for (int i = 0; i < n; ++i) y(i) = Rat(x[static_cast<size_t>(i)]) + offs(i);
        Rat norm = (y.transpose() * gram * y)(0, 0);
        if (best.sign() < 0 || norm < best) best = norm;
        return;
      }
      for (i64 v = -6; v <= 6; ++v) {
        x[static_cast<size_t>(pos)] = v;
        rec(pos + 1);
      }
    };
    rec(0);
    CHECK(got.norm == best);
    // witness attains the norm
    Rat wn = (got.witness.transpose() * lat.form * got.witness)(0, 0);
    CHECK(wn == got.norm);
  }
}

TEST_CASE("lll preserves the lattice") {
  const RootSystem& e8 = generate_roots(SimpleLieType::parse("E8"));
  auto red = lll_reduce_gram(e8.bilinear);
  CHECK(unimodular(to_mati(to_matq(red.u))));
  MatQ check = to_matq(red.u) * e8.bilinear * to_matq(red.u).transpose();
  CHECK(mat_eq(check, red.gram));
}
