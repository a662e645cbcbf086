#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdhkit/dimform.hpp"

#include <random>

using namespace gdhkit;

namespace {

CycleShape Sh(const char* s) { return CycleShape::parse(s); }

}  // namespace

TEST_CASE("eisenstein coefficients, small cases") {
  const auto& e1 = eisenstein_coeffs(1);
  REQUIRE(e1.coeffs.size() == 1);
  CHECK(e1.at(1) == Rat(1));

  const auto& e2 = eisenstein_coeffs(2);
  CHECK(e2.at(1) == Rat(3));
  CHECK(e2.at(2) == Rat(-1));

  const auto& e4 = eisenstein_coeffs(4);
  CHECK(e4.at(1) == Rat(6));
  CHECK(e4.at(2) == Rat(-3, 2));
  CHECK(e4.at(4) == Rat(-1, 2));
}

TEST_CASE("eisenstein defining relations hold for n <= 200") {
  // eisenstein_coeffs verifies the relations internally; this exercises all n
  // and spot-checks the extreme divisors.
  for (i64 n = 1; n <= 200; ++n) {
    const auto& e = eisenstein_coeffs(n);
    Rat at_t1(0), at_tn(0);
    for (const auto& [d, c] : e.coeffs) {
      at_t1 += c;            // (1, d) = 1
      at_tn += Rat(d) * c;   // (n, d) = d
    }
    CHECK(at_t1 == Rat(n));
    CHECK(at_tn == Rat(1));
  }
}

TEST_CASE("fixed dimensions from cycle shapes") {
  // For shape 2^12 the d=1 fixed space is the +1 eigenspace of the
  // involution, dimension 12 = b_2 * gcd(2,1).
  CHECK(fixed_dim(Sh("2^12"), 1) == 12);
  CHECK(fixed_dim(Sh("2^12"), 2) == 24);
  CHECK(fixed_dim(Sh("1^{-24} 2^{24}"), 1) == 0);
  CHECK(fixed_dim(Sh("1^{-24} 2^{24}"), 2) == 24);
  CHECK(fixed_dim(Sh("1^8 2^8"), 1) == 16);
}

TEST_CASE("dimension bound") {
  CHECK(dimension_bound(Sh("2^12"), 2) == Rat(36));
  CHECK(dimension_bound(Sh("1^{24}"), 25) == Rat(624));
  CHECK(dimension_bound(Sh("1^{-24} 2^{24}"), 2) == Rat(0));
  CHECK(dimension_bound(Sh("1^{24}"), 46) == Rat(1128));
  CHECK_THROWS(dimension_bound(Sh("2^12"), 3));
}

TEST_CASE("vacuum anomaly") {
  CHECK(vacuum_anomaly(Sh("2^12")) == Rat(3, 4));
  CHECK(vacuum_anomaly(Sh("4^6")) == Rat(15, 16));
  CHECK(vacuum_anomaly(Sh("1^{24}")) == Rat(0));
  CHECK(vacuum_anomaly(Sh("6^4")) == Rat(35, 36));
  CHECK(vacuum_anomaly(Sh("2^2 10^2")) == Rat(19, 20));
  CHECK(vacuum_anomaly(Sh("1^{2} 2 4 8^{2}")) == Rat(7, 8));
}

TEST_CASE("automorphism type") {
  CHECK(automorphism_type(1, Rat(0)) == 0);
  CHECK(automorphism_type(2, Rat(3, 2)) == 0);
  CHECK(automorphism_type(6, Rat(35, 36)) == 5);
  CHECK_THROWS(automorphism_type(2, Rat(1, 3)));
}

TEST_CASE("random shapes: coefficient identity") {
  // For shapes with order m | n: sum_d c_n(d) fixed_dim(d) = n sum_t b_t/t.
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<i64> pick_n(1, 24);
  std::uniform_int_distribution<i64> pick_b(-24, 24);
  int tested = 0;
  while (tested < 300) {
    i64 n = pick_n(rng);
    std::vector<i64> divs;
    for (i64 t = 1; t <= n; ++t)
      if (n % t == 0) divs.push_back(t);
    std::map<i64, i64> exps;
    i64 degree = 0;
    for (i64 t : divs) {
      i64 b = pick_b(rng);
      if (b != 0) {
        exps[t] = b;
        degree += t * b;
      }
    }
    if (exps.empty() || degree != 24) {
      // adjust with the t = 1 slot to land on degree 24
      i64 diff = 24 - degree;
      exps[1] += diff;
      if (exps[1] == 0) exps.erase(1);
      if (exps.empty()) continue;
    }
    CycleShape shape;
    shape.exponents = exps;
    if (shape.degree() != 24) continue;
    if (n % shape.order() != 0) continue;
    ++tested;
    Rat closed(24);
    for (auto [t, b] : shape.exponents) closed += Rat(n) * Rat(b, t);
    // dimension_bound internally asserts the coefficient form agrees.
    CHECK(dimension_bound(shape, n) == closed);
  }
}

TEST_CASE("vsf bound equals cycle shape bound") {
  auto check_auto = [](const char* type, std::vector<i64> coords, i64 n) {
    InnerAutomorphism a({KacComponent{SimpleLieType::parse(type), std::move(coords)}});
    Rat b = vsf_bound(a, n);  // internally asserts agreement with the shape bound
    return b;
  };
  CHECK(check_auto("A1", {1, 0}, 1) == Rat(27));
  CHECK(check_auto("A1", {1, 1}, 2) == Rat(24));
  // sigma_u on any structure gives the bound 24.
  InnerAutomorphism su = sigma_u(AffineStructure::parse("A_{1,1}^{24}"));
  CHECK(vsf_bound(su, su.order()) == Rat(24));
}
