#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdhkit/dimform.hpp"
#include "gdhkit/leech.hpp"

#include <random>

using namespace gdhkit;

namespace {

// Structural membership in the Leech lattice (ambient sqrt(8)-scaled
// coordinates): congruent coordinates, a Golay condition on the mod-4
// pattern, and a sum condition mod 8.
bool leech_contains(const VecL& x) {
  const GolayCode& code = build_golay();
  i64 parity = ((x(0) % 2) + 2) % 2;
  i64 sum = 0;
  uint32_t mask = 0;
  for (int i = 0; i < 24; ++i) {
    if (((x(i) % 2) + 2) % 2 != parity) return false;
    sum += x(i);
    i64 residue = ((x(i) % 4) + 4) % 4;
    if (residue == parity + 2) mask |= 1u << i;
  }
  if (!code.contains(mask)) return false;
  return ((sum % 8) + 8) % 8 == static_cast<i64>(4 * parity);
}

VecL ambient_of(const IntegerLattice& leech, const VecL& coords) {
  VecL x(24);
  for (int j = 0; j < 24; ++j) {
    Rat v(0);
    for (int i = 0; i < 24; ++i) v += Rat(coords(i)) * leech.basis(i, j);
    x(j) = v.num().to_i64();
  }
  return x;
}

LatticeIsometry minus_identity() {
  std::array<int, 24> id{};
  for (int i = 0; i < 24; ++i) id[static_cast<size_t>(i)] = i;
  return isometry_from_signed_permutation(id, 0xffffffu, "-1A");
}

// x -> x + 1 on F_23 (positions 0..22), parity position 23 fixed.
std::array<int, 24> cycle_perm() {
  std::array<int, 24> p{};
  for (int i = 0; i < 23; ++i) p[static_cast<size_t>(i)] = (i + 1) % 23;
  p[23] = 23;
  return p;
}

// x -> -1/x on the projective line over F_23 with infinity at position 23.
std::array<int, 24> involution_perm() {
  std::array<int, 24> p{};
  auto inv23 = [](int a) {
    for (int b = 1; b < 23; ++b)
      if (a * b % 23 == 1) return b;
    return 0;
  };
  p[23] = 0;
  p[0] = 23;
  for (int x = 1; x < 23; ++x) p[static_cast<size_t>(x)] = (23 - inv23(x)) % 23;
  return p;
}

}  // namespace

TEST_CASE("golay code invariants") {
  const GolayCode& code = build_golay();
  auto dist = code.weight_distribution();
  CHECK(dist[8] == 759);
  CHECK(dist[12] == 2576);
  CHECK(code.min_distance() == 8);
  CHECK(code.contains(0xffffffu));  // the all-ones word
  CHECK(code.codewords.size() == 4096);
}

TEST_CASE("leech lattice construction") {
  const IntegerLattice& leech = build_leech();
  MatQ g = leech.gram();
  CHECK(det_q(g) == Rat(1));
  for (int i = 0; i < 24; ++i) {
    CHECK(g(i, i).is_integer());
    CHECK_FALSE(g(i, i).num().is_odd());
  }
  // Structural membership test agrees with the basis on random combinations.
  std::mt19937 rng(5);
  std::uniform_int_distribution<i64> coeff(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    VecL c(24);
    for (int i = 0; i < 24; ++i) c(i) = coeff(rng);
    CHECK(leech_contains(ambient_of(leech, c)));
  }
  // Vectors outside: shift a lattice point by one unit.
  VecL bad = ambient_of(leech, VecL::Zero(24));
  bad(0) += 1;
  CHECK_FALSE(leech_contains(bad));
}

TEST_CASE("minimum norm 4 with the classical vector count") {
  const IntegerLattice& leech = build_leech();
  EnumerationOptions opts;
  opts.threads = 4;
  auto no_roots = short_vectors(leech, Rat(2), opts);
  CHECK(no_roots.empty());

  auto min_vectors = short_vectors(leech, Rat(4), opts);
  CHECK(min_vectors.size() == 98280);  // 196560 / 2

  // Classify by largest ambient coordinate: 552 frame-pair vectors
  // (+-4,+-4,0^22), 48576 octad vectors (+-2^8), 49152 odd vectors (3,1^23).
  i64 frames = 0, octads = 0, odds = 0;
  for (const auto& v : min_vectors) {
    CHECK(v.norm == Rat(4));
    VecL x = ambient_of(leech, v.coords);
    CHECK(leech_contains(x));
    i64 maxabs = 0;
    for (int i = 0; i < 24; ++i) maxabs = std::max<i64>(maxabs, std::abs(x(i)));
    if (maxabs == 4) ++frames;
    else if (maxabs == 2) ++octads;
    else if (maxabs == 3) ++odds;
  }
  CHECK(frames == 552);
  CHECK(octads == 48576);
  CHECK(odds == 49152);
}

TEST_CASE("isometries from signed permutations") {
  auto cyc = isometry_from_signed_permutation(cycle_perm(), 0, "23A");
  CHECK(cyc.order == 23);
  auto shape23 = cycle_shape_of(cyc);
  CHECK(shape23.exponents.at(1) == 1);
  CHECK(shape23.exponents.at(23) == 1);

  auto neg = minus_identity();
  CHECK(neg.order == 2);
  auto shape = cycle_shape_of(neg);
  CHECK(shape.exponents.at(1) == -24);
  CHECK(shape.exponents.at(2) == 24);

  auto invol = isometry_from_signed_permutation(involution_perm(), 0, "2^12");
  CHECK(invol.order == 2);
  auto shape2 = cycle_shape_of(invol);
  CHECK(shape2.exponents.size() == 1);
  CHECK(shape2.exponents.at(2) == 12);

  // A non-code sign mask must be rejected.
  std::array<int, 24> id{};
  for (int i = 0; i < 24; ++i) id[static_cast<size_t>(i)] = i;
  CHECK_THROWS(isometry_from_signed_permutation(id, 0x1u, "bad"));
}

TEST_CASE("fixed and projected lattices") {
  auto id24 = make_isometry(MatL::Identity(24, 24), "1A");
  CHECK(fixed_lattice(id24).rank() == 24);
  CHECK(projection_lattice(id24).rank() == 24);
  CHECK(quotient_order(id24, 1) == Int(1));
  CHECK(quotient_order(id24, 2) == Int(1 << 24));

  auto neg = minus_identity();
  CHECK(fixed_lattice(neg).rank() == 0);
  CHECK(projection_lattice(neg).rank() == 0);

  auto invol = isometry_from_signed_permutation(involution_perm(), 0, "2^12");
  auto fixed = fixed_lattice(invol);
  CHECK(fixed.rank() == 12);
  auto proj = projection_lattice(invol);
  CHECK(proj.rank() == 12);
  // Fixed lattice discriminant 2^12 (sqrt(2) times a unimodular lattice), so
  // the order-2 quotient is a single point and the order-4 one has 2^12.
  CHECK(dual_and_discriminant(fixed).discriminant == Rat(4096));
  CHECK(quotient_order(invol, 2) == Int(1));
  CHECK(quotient_order(invol, 4) == Int(4096));

  // pi_nu is idempotent.
  MatQ pi = MatQ::Zero(24, 24);
  MatL acc = MatL::Identity(24, 24);
  for (i64 i = 0; i < invol.order; ++i) {
    pi += to_matq(acc);
    acc = (acc * invol.matrix).eval();
  }
  pi *= Rat(1, invol.order);
  CHECK(mat_eq(MatQ(pi * pi), pi));
}

TEST_CASE("order doubling and the correcting shift") {
  auto neg = minus_identity();
  CHECK_FALSE(order_doubling(neg));
  VecQ s0 = doubling_vector(neg);
  for (int i = 0; i < 24; ++i) CHECK(s0(i).is_zero());

  auto id24 = make_isometry(MatL::Identity(24, 24), "1A");
  CHECK_FALSE(order_doubling(id24));

  auto invol = isometry_from_signed_permutation(involution_perm(), 0, "2^12");
  if (order_doubling(invol)) {
    VecQ s = doubling_vector(invol);
    // Defining congruence: 2m <s, alpha> = <alpha, nu^{m/2} alpha> mod 2.
    const IntegerLattice& leech = build_leech();
    MatQ g = leech.gram();
    MatL half = mat_power(invol.matrix, invol.order / 2);
    MatQ gn = g * to_matq(half).transpose();
    for (int i = 0; i < 24; ++i) {
      Rat lhs = Rat(2 * invol.order) * (g.row(i) * s)(0, 0);
      CHECK(lhs.is_integer());
      CHECK(((lhs - gn(i, i)) / Rat(2)).is_integer());
    }
    // s is fixed by the isometry.
    RowQ moved = s.transpose() * to_matq(invol.matrix);
    for (int i = 0; i < 24; ++i) CHECK(moved(i) == s(i));
  }
}

TEST_CASE("automorphism orders") {
  auto id24 = make_isometry(MatL::Identity(24, 24), "1A");
  LeechAutomorphism trivial{id24, VecQ::Zero(24)};
  CHECK(automorphism_order(trivial) == 1);

  // Shift of order 3 in the quotient.
  VecQ f = VecQ::Zero(24);
  f(0) = Rat(1, 3);
  LeechAutomorphism sigma{id24, f};
  CHECK(automorphism_order(sigma) == 3);

  auto neg = minus_identity();
  LeechAutomorphism negLift{neg, VecQ::Zero(24)};
  CHECK(automorphism_order(negLift) == 2);
}

TEST_CASE("twisted weights and types: the moonshine chain") {
  auto neg = minus_identity();
  LeechAutomorphism negLift{neg, VecQ::Zero(24)};
  CHECK(twisted_weight(negLift) == Rat(3, 2));
  CHECK(type_of_automorphism(negLift, 2) == 0);
  auto shape = cycle_shape_of(neg);
  CHECK(dimension_bound(shape, 2) == Rat(0));

  auto id24 = make_isometry(MatL::Identity(24, 24), "1A");
  LeechAutomorphism trivial{id24, VecQ::Zero(24)};
  CHECK(twisted_weight(trivial) == Rat(0));
}

TEST_CASE("deep hole shift has weight one") {
  const IntegerLattice& leech = build_leech();
  auto id24 = make_isometry(MatL::Identity(24, 24), "1A");
  // Ambient (4, 0^23)/sqrt(8): order 2 in Lambda_Q / Lambda, norm 2.
  VecL ambient = VecL::Zero(24);
  ambient(0) = 4;
  MatQ binv = inverse_q(leech.basis);
  VecQ coords(24);
  for (int j = 0; j < 24; ++j) {
    Rat v(0);
    for (int i = 0; i < 24; ++i) v += Rat(ambient(i)) * binv(i, j);
    coords(j) = v;
  }
  LeechAutomorphism hole{id24, coords};
  CHECK(automorphism_order(hole) == 2);
  CHECK(twisted_weight(hole) == Rat(1));

  // Covering radius: min norm over a coset is at most 2.
  std::mt19937 rng(17);
  std::uniform_int_distribution<i64> num(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    VecQ shift(24);
    for (int i = 0; i < 24; ++i) shift(i) = Rat(num(rng), 1 + static_cast<i64>(rng() % 6));
    CosetVector coset{leech, (shift.transpose() * leech.basis).transpose()};
    CHECK(min_coset_norm(coset).norm <= Rat(2));
  }
}
