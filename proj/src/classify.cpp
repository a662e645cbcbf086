#include "gdhkit/classify.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gdhkit {

std::vector<Co0Class> load_co0_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_co0_table: cannot open " + path);
  nlohmann::json j;
  in >> j;
  std::vector<Co0Class> classes;
  for (const auto& row : j.at("classes")) {
    Co0Class c;
    c.name = row.at("name").get<std::string>();
    c.shape = CycleShape::parse(row.at("shape").get<std::string>());
    if (c.shape.degree() != 24)
      throw std::runtime_error("load_co0_table: class " + c.name + " has degree " +
                               std::to_string(c.shape.degree()) + " != 24");
    c.fixed_rank = c.shape.fixed_rank();
    if (c.fixed_rank < 0 || c.fixed_rank % 2 != 0)
      throw std::runtime_error("load_co0_table: class " + c.name + " has invalid fixed rank " +
                               std::to_string(c.fixed_rank));
    classes.push_back(std::move(c));
  }
  return classes;
}

Co0FilterStats co0_filter_stats(const std::vector<Co0Class>& classes) {
  Co0FilterStats stats;
  stats.total = classes.size();
  for (const auto& c : classes) {
    if (c.fixed_rank <= 0) continue;
    ++stats.with_fixed_space;
    if (vacuum_anomaly(c.shape) < Rat(1)) ++stats.anomaly_below_one;
  }
  return stats;
}

std::vector<CandidatePair> candidate_pairs(const std::vector<AffineStructure>& structures,
                                           const std::vector<Co0Class>& classes) {
  std::vector<CandidatePair> pairs;
  for (const auto& s : structures) {
    i64 n = order_lcm(s);
    i64 lev = level_lcm(s);
    i64 rank = total_rank(s);
    const Co0Class* found = nullptr;
    for (const auto& c : classes) {
      if (c.fixed_rank != rank) continue;
      if (n % c.order() != 0) continue;
      Rat anomaly = vacuum_anomaly(c.shape);
      if (anomaly >= Rat(1)) continue;
      if (Rat(1) / (Rat(1) - anomaly) != Rat(lev)) continue;
      if (found != nullptr)
        throw std::domain_error("candidate_pairs: structure " + s.pretty_str() +
                                " matches more than one class (" + found->name + ", " + c.name +
                                ")");
      found = &c;
    }
    if (found) pairs.push_back({s, *found, n});
  }
  return pairs;
}

bool extremality_necessary(const LeechAutomorphism& g, i64 n) {
  if (automorphism_order(g) != n)
    throw std::invalid_argument("extremality_necessary: order mismatch");
  for (i64 i = 1; i < std::max<i64>(n, 2); ++i) {
    if (n > 1 && std::gcd(i, n) != 1) continue;
    if (twisted_weight(power(g, i)) < Rat(1)) return false;
    if (n == 1) break;
  }
  return true;
}

i64 QuotientSpace::size() const {
  i64 s = 1;
  for (i64 m : moduli) {
    if (m < 1) throw std::invalid_argument("QuotientSpace: moduli must be positive");
    s *= m;
  }
  return s;
}

i64 QuotientSpace::index_of(const std::vector<i64>& coords) const {
  if (coords.size() != moduli.size())
    throw std::invalid_argument("QuotientSpace::index_of: wrong arity");
  i64 idx = 0;
  for (size_t i = 0; i < moduli.size(); ++i) {
    i64 c = coords[i] % moduli[i];
    if (c < 0) c += moduli[i];
    idx = idx * moduli[i] + c;
  }
  return idx;
}

std::vector<i64> QuotientSpace::coords_of(i64 index) const {
  std::vector<i64> c(moduli.size(), 0);
  for (size_t i = moduli.size(); i-- > 0;) {
    c[i] = index % moduli[i];
    index /= moduli[i];
  }
  return c;
}

std::vector<Orbit> orbit_enumerate(const QuotientSpace& space,
                                   const std::vector<QuotientAffineMap>& generators,
                                   i64 cap) {
  i64 n = space.size();
  if (n > cap)
    throw std::domain_error("orbit_enumerate: quotient has " + std::to_string(n) +
                            " elements, above the cap of " + std::to_string(cap) +
                            "; shard the computation externally");
  size_t r = space.moduli.size();
  for (const auto& g : generators) {
    if (g.linear.rows() != static_cast<Eigen::Index>(r) ||
        g.linear.cols() != static_cast<Eigen::Index>(r) ||
        g.shift.size() != static_cast<Eigen::Index>(r))
      throw std::invalid_argument("orbit_enumerate: generator arity mismatch");
    // Well defined on the quotient: s_i * linear(i, j) = 0 mod s_j.
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j)
        if ((space.moduli[i] * g.linear(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) %
                space.moduli[j] != 0)
          throw std::invalid_argument("orbit_enumerate: generator does not preserve the quotient");
  }

  auto apply = [&](const QuotientAffineMap& g, const std::vector<i64>& c) {
    std::vector<i64> out(r, 0);
    for (size_t j = 0; j < r; ++j) {
      i64 v = g.shift(static_cast<Eigen::Index>(j));
      for (size_t i = 0; i < r; ++i)
        v += c[i] * g.linear(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      v %= space.moduli[j];
      if (v < 0) v += space.moduli[j];
      out[j] = v;
    }
    return out;
  };

  std::vector<bool> visited(static_cast<size_t>(n), false);
  std::vector<Orbit> orbits;
  std::deque<i64> queue;
  for (i64 start = 0; start < n; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    Orbit orbit;
    orbit.representative = space.coords_of(start);
    visited[static_cast<size_t>(start)] = true;
    queue.push_back(start);
    while (!queue.empty()) {
      i64 cur = queue.front();
      queue.pop_front();
      ++orbit.size;
      auto cc = space.coords_of(cur);
      for (const auto& g : generators) {
        i64 nxt = space.index_of(apply(g, cc));
        if (!visited[static_cast<size_t>(nxt)]) {
          visited[static_cast<size_t>(nxt)] = true;
          queue.push_back(nxt);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  i64 covered = 0;
  for (const auto& o : orbits) covered += o.size;
  if (covered != n) throw std::logic_error("orbit_enumerate: orbits do not partition the space");
  return orbits;
}

LatticeQuotient build_lattice_quotient(const LatticeIsometry& iso, i64 n) {
  if (n % iso.order != 0)
    throw std::invalid_argument("build_lattice_quotient: isometry order must divide n");
  const IntegerLattice& leech = build_leech();
  MatI kern = fixed_lattice_rows(iso);
  Eigen::Index r = kern.rows();

  LatticeQuotient q;
  q.s_nu = doubling_vector(iso);
  q.qbasis = to_matq(kern) / Rat(n);  // rows: basis of (1/n) Lambda^nu

  if (r == 0) {
    q.space.moduli = {};
    q.v = MatL(0, 0);
    q.v_inv = MatL(0, 0);
    return q;
  }

  // pi_nu(Lambda) expressed in qbasis coordinates (integral).
  MatQ pi = MatQ::Zero(24, 24);
  MatL acc = MatL::Identity(24, 24);
  for (i64 i = 0; i < iso.order; ++i) {
    pi += to_matq(acc);
    acc = (acc * iso.matrix).eval();
  }
  pi *= Rat(1, iso.order);
  MatQ proj_rows = lattice_row_basis(pi);  // r x 24
  if (proj_rows.rows() != r)
    throw std::logic_error("build_lattice_quotient: projection rank mismatch");

  MatI rel(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    auto sol = solve_left_q(q.qbasis, proj_rows.row(i));
    if (!sol) throw std::logic_error("build_lattice_quotient: projection outside the span");
    for (Eigen::Index j = 0; j < r; ++j) {
      if (!(*sol)(j).is_integer())
        throw std::logic_error("build_lattice_quotient: projection not integral over (1/n) fixed lattice");
      rel(i, j) = (*sol)(j).num();
    }
  }
  auto s = snf(rel);
  q.space.moduli.resize(static_cast<size_t>(r));
  for (Eigen::Index i = 0; i < r; ++i) {
    Int d = s.s(i, i);
    if (d.is_zero()) throw std::logic_error("build_lattice_quotient: degenerate relation matrix");
    q.space.moduli[static_cast<size_t>(i)] = abs(d).to_i64();
  }
  q.v = to_matl(s.v);
  q.v_inv = to_matl(to_mati(inverse_q(to_matq(s.v))));
  return q;
}

QuotientAffineMap shifted_action(const LatticeQuotient& q, const LatticeIsometry& iso,
                                 const MatL& tau) {
  if (!mat_eq(MatL(tau * iso.matrix), MatL(iso.matrix * tau)))
    throw std::invalid_argument("shifted_action: element does not commute with the isometry");
  Eigen::Index r = q.qbasis.rows();
  // Action on qbasis coordinates: w(i, :) = coords of qbasis_i * tau.
  MatL w(r, r);
  MatQ moved = q.qbasis * to_matq(tau);
  for (Eigen::Index i = 0; i < r; ++i) {
    auto sol = solve_left_q(q.qbasis, moved.row(i));
    if (!sol) throw std::invalid_argument("shifted_action: tau does not preserve the fixed space");
    for (Eigen::Index j = 0; j < r; ++j) {
      if (!(*sol)(j).is_integer())
        throw std::invalid_argument("shifted_action: tau does not preserve (1/n) Lambda^nu");
      w(i, j) = (*sol)(j).num().to_i64();
    }
  }
  // (tau - id) s_nu in qbasis coordinates.
  RowQ delta_row = (q.s_nu.transpose() * to_matq(tau)) - q.s_nu.transpose();
  auto sol = solve_left_q(q.qbasis, delta_row);
  if (!sol) throw std::invalid_argument("shifted_action: shifted part outside the fixed space");
  VecL sigma(r);
  for (Eigen::Index j = 0; j < r; ++j) {
    if (!(*sol)(j).is_integer())
      throw std::invalid_argument("shifted_action: (tau - id) s_nu not in (1/n) Lambda^nu");
    sigma(j) = (*sol)(j).num().to_i64();
  }
  QuotientAffineMap map;
  map.linear = (q.v_inv * w * q.v).eval();
  map.shift = (sigma.transpose() * q.v).transpose();
  return map;
}

VecQ quotient_element(const LatticeQuotient& q, const std::vector<i64>& coords) {
  Eigen::Index r = q.qbasis.rows();
  VecL t(r);
  for (Eigen::Index j = 0; j < r; ++j) {
    i64 v = 0;
    for (Eigen::Index i = 0; i < r; ++i)
      v += coords[static_cast<size_t>(i)] * q.v_inv(i, j);
    t(j) = v;
  }
  MatL trow = t.transpose();
  return (to_matq(trow) * q.qbasis).transpose();
}

GdhReport gdh_pipeline(const LatticeIsometry& iso, i64 n,
                       const std::vector<MatL>& centralizer_generators,
                       const RankConditionFn& rank_condition, bool compute_extremality) {
  GdhReport report;
  report.class_name = iso.name;
  report.n = n;
  LatticeQuotient q = build_lattice_quotient(iso, n);
  std::vector<QuotientAffineMap> maps;
  for (const auto& tau : centralizer_generators) maps.push_back(shifted_action(q, iso, tau));
  auto orbits = orbit_enumerate(q.space, maps);
  report.orbit_count = static_cast<i64>(orbits.size());

  for (const auto& orbit : orbits) {
    VecQ f = quotient_element(q, orbit.representative);
    LeechAutomorphism a{iso, q.s_nu + f};
    if (automorphism_order(a) != n) continue;
    GdhClassReport row;
    row.rep_coords = orbit.representative;
    row.orbit_size = orbit.size;
    row.order = n;
    row.weight = twisted_weight(a);
    row.type = automorphism_type(n, row.weight);
    row.extremal_necessary = compute_extremality ? extremality_necessary(a, n) : false;
    row.rank_condition = rank_condition ? rank_condition(a, n) : TriState::Unknown;
    report.classes.push_back(std::move(row));
  }
  report.classes_of_order_n = static_cast<i64>(report.classes.size());
  for (const auto& c : report.classes) {
    if (c.type == 0) ++report.type_zero;
    else ++report.non_type_zero;
  }
  return report;
}

std::vector<MatL> load_centralizer_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_centralizer_generators: cannot open " + path);
  nlohmann::json j;
  in >> j;
  std::vector<MatL> gens;
  for (const auto& mat : j.at("generators")) {
    MatL m(24, 24);
    if (mat.size() != 24) throw std::runtime_error("load_centralizer_generators: need 24 rows");
    for (int i = 0; i < 24; ++i)
      for (int k = 0; k < 24; ++k) m(i, k) = mat[static_cast<size_t>(i)][static_cast<size_t>(k)].get<i64>();
    gens.push_back(std::move(m));
  }
  return gens;
}

}  // namespace gdhkit
