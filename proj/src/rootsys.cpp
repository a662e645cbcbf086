#include "gdhkit/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace gdhkit {

bool SimpleLieType::valid() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::string SimpleLieType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

SimpleLieType SimpleLieType::parse(const std::string& s) {
  if (s.size() < 2 || s[0] < 'A' || s[0] > 'G')
    throw std::invalid_argument("SimpleLieType::parse: bad type string '" + s + "'");
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("SimpleLieType::parse: bad type string '" + s + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  SimpleLieType t{static_cast<Family>(s[0]), rank};
  if (!t.valid()) throw std::invalid_argument("SimpleLieType::parse: invalid rank for '" + s + "'");
  return t;
}

Rat RootSystem::inner(const VecL& x, const VecL& y) const {
  Rat s(0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (x(i) != 0 && y(j) != 0) s += Rat(x(i) * y(j)) * bilinear(i, j);
  return s;
}

Rat RootSystem::inner(const VecQ& x, const VecQ& y) const {
  Rat s(0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += x(i) * y(j) * bilinear(i, j);
  return s;
}

namespace {

struct DiagramData {
  std::vector<std::pair<int, int>> edges;  // 0-based node pairs
  std::vector<Rat> half_norms;             // d_i = (alpha_i, alpha_i)/2
};

DiagramData diagram(SimpleLieType t) {
  int l = t.rank;
  DiagramData d;
  d.half_norms.assign(l, Rat(1));
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) d.edges.push_back({i, i + 1});
  };
  switch (t.family) {
    case Family::A:
      chain(0, l - 1);
      break;
    case Family::B:
      chain(0, l - 1);
      d.half_norms[l - 1] = Rat(1, 2);
      break;
    case Family::C:
      chain(0, l - 1);
      for (int i = 0; i < l - 1; ++i) d.half_norms[i] = Rat(1, 2);
      break;
    case Family::D:
      chain(0, l - 2);
      d.edges.push_back({l - 3, l - 1});
      break;
    case Family::E:
      // Bourbaki: node 2 hangs off node 4 of the chain 1-3-4-5-...-l.
      d.edges.push_back({0, 2});
      chain(2, l - 1);
      d.edges.push_back({1, 3});
      break;
    case Family::F:
      chain(0, 3);
      d.half_norms[2] = d.half_norms[3] = Rat(1, 2);
      break;
    case Family::G:
      d.edges.push_back({0, 1});
      d.half_norms[1] = Rat(1, 3);
      break;
  }
  return d;
}

RootSystem build(SimpleLieType type) {
  if (!type.valid())
    throw std::invalid_argument("generate_roots: invalid type " +
                                std::string(1, static_cast<char>(type.family)) +
                                std::to_string(type.rank));
  int l = type.rank;
  DiagramData dia = diagram(type);

  RootSystem rs;
  rs.type = type;
  rs.bilinear = MatQ::Zero(l, l);
  for (int i = 0; i < l; ++i) rs.bilinear(i, i) = Rat(2) * dia.half_norms[i];
  for (auto [i, j] : dia.edges) {
    Rat v = -std::max(dia.half_norms[i], dia.half_norms[j]);
    rs.bilinear(i, j) = v;
    rs.bilinear(j, i) = v;
  }

  // cartan(i,j) = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
  rs.cartan = MatL::Zero(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rat c = Rat(2) * rs.bilinear(i, j) / rs.bilinear(j, j);
      if (!c.is_integer()) throw std::logic_error("non-integral Cartan entry");
      rs.cartan(i, j) = c.num().to_i64();
    }

  // Reflection closure of the simple roots.
  std::set<std::vector<i64>> seen;
  std::vector<std::vector<i64>> queue;
  for (int i = 0; i < l; ++i) {
    std::vector<i64> e(l, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto c = queue.back();
    queue.pop_back();
    for (int j = 0; j < l; ++j) {
      // s_j(beta) = beta - <beta, alpha_j^vee> alpha_j
      i64 pairing = 0;
      for (int i = 0; i < l; ++i) pairing += c[i] * rs.cartan(i, j);
      auto c2 = c;
      c2[j] -= pairing;
      if (seen.insert(c2).second) queue.push_back(c2);
    }
  }

  rs.roots = MatL(static_cast<Eigen::Index>(seen.size()), l);
  Eigen::Index row = 0;
  for (const auto& c : seen) {
    for (int i = 0; i < l; ++i) rs.roots(row, i) = c[i];
    ++row;
  }

  // Weyl vector: (rho, alpha_i^vee) = 1 for all i.
  MatQ cq = to_matq(rs.cartan);
  auto rho = solve_left_q(cq, RowQ::Constant(l, Rat(1)));
  if (!rho) throw std::logic_error("Cartan matrix singular");
  rs.weyl_vector = rho->transpose();

  // Highest root: unique root of maximal height.
  Eigen::Index best = 0;
  i64 best_height = std::numeric_limits<i64>::min();
  for (Eigen::Index r = 0; r < rs.roots.rows(); ++r) {
    i64 h = rs.roots.row(r).sum();
    if (h > best_height) { best_height = h; best = r; }
  }
  rs.highest_root = rs.roots.row(best).transpose();
  rs.kac_labels = rs.highest_root;
  return rs;
}

const RootSystem& cached(SimpleLieType type) {
  static std::map<SimpleLieType, RootSystem> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, build(type)).first;
  return it->second;
}

}  // namespace

const RootSystem& generate_roots(SimpleLieType type) { return cached(type); }

namespace {

int dual_coxeter_uncached(SimpleLieType type) {
  const RootSystem& rs = generate_roots(type);
  // Killing identity: sum over roots of (alpha, y)^2 = 2 h^vee (y, y),
  // checked for y ranging over every simple root.
  int value = 0;
  for (int k = 0; k < rs.rank(); ++k) {
    VecL y = VecL::Zero(rs.rank());
    y(k) = 1;
    Rat sum(0);
    for (Eigen::Index r = 0; r < rs.roots.rows(); ++r) {
      Rat p = rs.inner(VecL(rs.roots.row(r).transpose()), y);
      sum += p * p;
    }
    Rat h = sum / (Rat(2) * rs.norm_sq(y));
    if (!h.is_integer()) throw std::logic_error("dual_coxeter: non-integral value");
    int hv = static_cast<int>(h.num().to_i64());
    if (k == 0) value = hv;
    else if (hv != value) throw std::logic_error("dual_coxeter: depends on test vector");
  }
  return value;
}

}  // namespace

int dual_coxeter(SimpleLieType type) {
  static std::map<SimpleLieType, int> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, dual_coxeter_uncached(type)).first;
  return it->second;
}

int dimension(SimpleLieType type) {
  const RootSystem& rs = generate_roots(type);
  return static_cast<int>(rs.root_count()) + rs.rank();
}

int lacing(SimpleLieType type) {
  switch (type.family) {
    case Family::A: case Family::D: case Family::E: return 1;
    case Family::B: case Family::C: case Family::F: return 2;
    case Family::G: return 3;
  }
  return 0;
}

Rat weyl_norm_sq(SimpleLieType type) {
  const RootSystem& rs = generate_roots(type);
  return rs.inner(rs.weyl_vector, rs.weyl_vector);
}

}  // namespace gdhkit
