#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdhkit/classify.hpp"
#include "gdhkit/data_paths.hpp"

#include <random>
#include <set>

using namespace gdhkit;

namespace {

QuotientAffineMap affine_map(const std::vector<std::vector<i64>>& linear,
                             const std::vector<i64>& shift) {
  QuotientAffineMap m;
  size_t r = shift.size();
  m.linear = MatL(r, r);
  m.shift = VecL(r);
  for (size_t i = 0; i < r; ++i) {
    m.shift(static_cast<Eigen::Index>(i)) = shift[i];
    for (size_t j = 0; j < r; ++j)
      m.linear(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = linear[i][j];
  }
  return m;
}

// Brute-force orbit partition for the oracle.
std::vector<std::vector<i64>> brute_orbits(const QuotientSpace& space,
                                           const std::vector<QuotientAffineMap>& gens) {
  i64 n = space.size();
  std::vector<i64> orbit_of(static_cast<size_t>(n), -1);
  std::vector<std::vector<i64>> orbits;
  for (i64 s = 0; s < n; ++s) {
    if (orbit_of[static_cast<size_t>(s)] >= 0) continue;
    std::set<i64> members{s};
    std::vector<i64> stack{s};
    while (!stack.empty()) {
      i64 cur = stack.back();
      stack.pop_back();
      auto c = space.coords_of(cur);
      for (const auto& g : gens) {
        std::vector<i64> img(c.size());
        for (size_t j = 0; j < c.size(); ++j) {
          i64 v = g.shift(static_cast<Eigen::Index>(j));
          for (size_t i = 0; i < c.size(); ++i)
            v += c[i] * g.linear(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
          v %= space.moduli[j];
          if (v < 0) v += space.moduli[j];
          img[j] = v;
        }
        i64 idx = space.index_of(img);
        if (!members.count(idx)) {
          members.insert(idx);
          stack.push_back(idx);
        }
      }
    }
    std::vector<i64> sorted_members(members.begin(), members.end());
    for (i64 m : sorted_members) orbit_of[static_cast<size_t>(m)] = static_cast<i64>(orbits.size());
    orbits.push_back(sorted_members);
  }
  return orbits;
}

}  // namespace

TEST_CASE("orbit enumeration basics") {
  QuotientSpace space{{3, 3}};
  CHECK(space.size() == 9);

  auto orbits = orbit_enumerate(space, {});
  CHECK(orbits.size() == 9);

  // {+-1} acting linearly: 0 and four +- pairs.
  auto neg = affine_map({{2, 0}, {0, 2}}, {0, 0});
  auto orbits2 = orbit_enumerate(space, {neg});
  CHECK(orbits2.size() == 5);

  // Ill-defined generator rejected on Z/2 x Z/4.
  QuotientSpace bad{{2, 4}};
  auto badmap = affine_map({{0, 1}, {1, 0}}, {0, 0});
  CHECK_THROWS(orbit_enumerate(bad, {badmap}));
}

TEST_CASE("orbit enumeration matches brute force on random quotients") {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 50; ++trial) {
    int r = 1 + static_cast<int>(rng() % 3);
    QuotientSpace space;
    for (int i = 0; i < r; ++i) space.moduli.push_back(1 + static_cast<i64>(rng() % 6));
    int ngens = 1 + static_cast<int>(rng() % 3);
    std::vector<QuotientAffineMap> gens;
    for (int g = 0; g < ngens; ++g) {
      std::vector<std::vector<i64>> lin(static_cast<size_t>(r), std::vector<i64>(static_cast<size_t>(r), 0));
      for (int i = 0; i < r; ++i) {
        i64 m = space.moduli[static_cast<size_t>(i)];
        i64 u = 1 + static_cast<i64>(rng() % m);
        while (std::gcd(u, m) != 1) u = 1 + static_cast<i64>(rng() % m);
        lin[static_cast<size_t>(i)][static_cast<size_t>(i)] = u;
      }
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
          if (space.moduli[static_cast<size_t>(i)] == space.moduli[static_cast<size_t>(j)] &&
              rng() % 2 == 0) {
            std::swap(lin[static_cast<size_t>(i)], lin[static_cast<size_t>(j)]);
          }
      std::vector<i64> shift(static_cast<size_t>(r));
      for (int i = 0; i < r; ++i)
        shift[static_cast<size_t>(i)] = static_cast<i64>(rng() % space.moduli[static_cast<size_t>(i)]);
      gens.push_back(affine_map(lin, shift));
    }
    auto fast = orbit_enumerate(space, gens);
    auto slow = brute_orbits(space, gens);
    REQUIRE(fast.size() == slow.size());
    i64 total = 0;
    for (size_t k = 0; k < fast.size(); ++k) {
      CHECK(space.index_of(fast[k].representative) == slow[k][0]);
      CHECK(fast[k].size == static_cast<i64>(slow[k].size()));
      total += fast[k].size;
    }
    CHECK(total == space.size());
  }
}

TEST_CASE("co0 table loading validates entries") {
  if (!data_file_exists("co0_frame_shapes.json")) {
    MESSAGE("co0_frame_shapes.json not bundled; skipping");
    return;
  }
  auto classes = load_co0_table(data_file("co0_frame_shapes.json"));
  auto stats = co0_filter_stats(classes);
  CHECK(stats.total == 167);
  CHECK(stats.with_fixed_space == 72);
  CHECK(stats.anomaly_below_one == 50);
}

TEST_CASE("candidate pairs against the bundled data") {
  if (!data_file_exists("co0_frame_shapes.json")) {
    MESSAGE("co0_frame_shapes.json not bundled; skipping");
    return;
  }
  auto classes = load_co0_table(data_file("co0_frame_shapes.json"));
  auto structures = enumerate_eq1();
  auto pairs = candidate_pairs(structures, classes);
  CHECK(pairs.size() == 82);

  for (const auto& p : pairs) {
    Rat anomaly = vacuum_anomaly(p.co0_class.shape);
    CHECK(anomaly == Rat(1) - Rat(1, level_lcm(p.structure)));
    CHECK(p.n % p.co0_class.order() == 0);
    CHECK(p.co0_class.fixed_rank == total_rank(p.structure));
  }
}

TEST_CASE("extremality necessary condition") {
  auto id24 = make_isometry(MatL::Identity(24, 24), "1A");
  const IntegerLattice& leech = build_leech();
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
  CHECK(extremality_necessary(hole, 2));

  std::array<int, 24> id{};
  for (int i = 0; i < 24; ++i) id[static_cast<size_t>(i)] = i;
  auto neg = isometry_from_signed_permutation(id, 0xffffffu, "-1A");
  LeechAutomorphism negLift{neg, VecQ::Zero(24)};
  CHECK(extremality_necessary(negLift, 2));
}
