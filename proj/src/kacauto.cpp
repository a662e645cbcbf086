#include "gdhkit/kacauto.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gdhkit {

i64 CycleShape::degree() const {
  i64 d = 0;
  for (auto [t, b] : exponents) d += t * b;
  return d;
}

i64 CycleShape::fixed_rank() const {
  i64 r = 0;
  for (auto [t, b] : exponents) r += b;
  return r;
}

i64 CycleShape::order() const {
  i64 m = 1;
  for (auto [t, b] : exponents)
    if (b != 0) m = lcm_i64(m, t);
  return m;
}

std::string CycleShape::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto [t, b] : exponents) {
    if (b == 0) continue;
    if (!first) os << " ";
    first = false;
    os << t;
    if (b != 1) os << "^{" << b << "}";
  }
  if (first) os << "1^{0}";
  return os.str();
}

CycleShape CycleShape::parse(const std::string& s) {
  CycleShape shape;
  size_t i = 0;
  auto read_int = [&]() -> i64 {
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("CycleShape::parse: expected number in '" + s + "'");
    return std::stoll(s.substr(start, i - start));
  };
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '*')) ++i;
    if (i >= s.size()) break;
    i64 t = read_int();
    i64 b = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      bool braced = i < s.size() && s[i] == '{';
      if (braced) ++i;
      b = read_int();
      if (braced) {
        if (i >= s.size() || s[i] != '}') throw std::invalid_argument("CycleShape::parse: missing '}'");
        ++i;
      }
    }
    if (t <= 0) throw std::invalid_argument("CycleShape::parse: non-positive cycle length");
    shape.exponents[t] += b;
    if (shape.exponents[t] == 0) shape.exponents.erase(t);
  }
  return shape;
}

i64 KacComponent::order() const {
  const RootSystem& rs = generate_roots(type);
  if (coords.size() != static_cast<size_t>(type.rank) + 1)
    throw std::invalid_argument("KacComponent: need rank+1 Kac coordinates");
  i64 m = coords[0];
  for (int i = 1; i <= type.rank; ++i) {
    if (coords[i] < 0) throw std::invalid_argument("KacComponent: negative coordinate");
    m += rs.kac_labels(i - 1) * coords[i];
  }
  if (coords[0] < 0) throw std::invalid_argument("KacComponent: negative coordinate");
  if (m <= 0) throw std::invalid_argument("KacComponent: zero coordinate vector");
  return m;
}

InnerAutomorphism::InnerAutomorphism(std::vector<KacComponent> comps)
    : components(std::move(comps)) {
  if (components.empty()) throw std::invalid_argument("InnerAutomorphism: no components");
  for (auto& c : components) {
    i64 g = 0;
    for (i64 s : c.coords) g = std::gcd(g, s);
    if (g == 0) throw std::invalid_argument("InnerAutomorphism: zero coordinate vector");
    if (g > 1)
      for (i64& s : c.coords) s /= g;
    c.order();  // validates
  }
}

i64 InnerAutomorphism::order() const {
  i64 m = 1;
  for (const auto& c : components) m = lcm_i64(m, c.order());
  return m;
}

VecQ delta(const InnerAutomorphism& a, size_t component) {
  const KacComponent& c = a.components.at(component);
  const RootSystem& rs = generate_roots(c.type);
  i64 m = c.order();
  // (alpha_i, delta) = s_i/m: solve bilinear * d = s/m.
  VecQ rhs(c.type.rank);
  for (int i = 0; i < c.type.rank; ++i) rhs(i) = Rat(c.coords[i + 1], m);
  auto d = solve_right_q(rs.bilinear, rhs);
  if (!d) throw std::logic_error("delta: bilinear form singular");
  return *d;
}

std::vector<i64> eigenspace_dims(const InnerAutomorphism& a, size_t component) {
  const KacComponent& c = a.components.at(component);
  const RootSystem& rs = generate_roots(c.type);
  i64 m = c.order();
  std::vector<i64> dims(static_cast<size_t>(m), 0);
  dims[0] = c.type.rank;
  // A root sum c_i alpha_i lands in eigenspace (sum c_i s_i) mod m.
  for (Eigen::Index r = 0; r < rs.roots.rows(); ++r) {
    i64 j = 0;
    for (int i = 0; i < c.type.rank; ++i) j += rs.roots(r, i) * c.coords[i + 1];
    j %= m;
    if (j < 0) j += m;
    dims[static_cast<size_t>(j)] += 1;
  }
  return dims;
}

std::vector<i64> eigenspace_dims(const InnerAutomorphism& a) {
  i64 m = a.order();
  std::vector<i64> dims(static_cast<size_t>(m), 0);
  for (size_t k = 0; k < a.components.size(); ++k) {
    i64 mc = a.components[k].order();
    auto part = eigenspace_dims(a, k);
    i64 scale = m / mc;
    for (i64 j = 0; j < mc; ++j) dims[static_cast<size_t>(j * scale)] += part[static_cast<size_t>(j)];
  }
  return dims;
}

CycleShapeOutcome cycle_shape(const std::vector<i64>& dims, i64 m) {
  CycleShapeOutcome out;
  if (m <= 0 || dims.size() != static_cast<size_t>(m)) {
    out.message = "cycle_shape: dims must have length m";
    return out;
  }
  for (i64 i = 0; i < m; ++i)
    for (i64 j = i + 1; j < m; ++j)
      if (std::gcd(i, m) == std::gcd(j, m) && dims[i] != dims[j]) {
        out.bad_i = i;
        out.bad_j = j;
        out.message = "not quasirational: dim(" + std::to_string(i) + ") = " +
                      std::to_string(dims[i]) + " but dim(" + std::to_string(j) + ") = " +
                      std::to_string(dims[j]);
        return out;
      }
  std::vector<i64> divisors;
  for (i64 t = 1; t <= m; ++t)
    if (m % t == 0) divisors.push_back(t);
  // Multiplicity of the primitive d-th roots of unity: any j with m/gcd(j,m)=d,
  // e.g. j = m/d.  A_d = sum of b_t over t with d | t | m.
  std::map<i64, i64> mult;
  for (i64 d : divisors) mult[d] = dims[static_cast<size_t>(m / d % m)];
  for (auto it = divisors.rbegin(); it != divisors.rend(); ++it) {
    i64 t = *it;
    i64 b = mult[t];
    for (i64 u : divisors)
      if (u > t && u % t == 0) b -= out.shape.exponents.count(u) ? out.shape.exponents[u] : 0;
    if (b != 0) out.shape.exponents[t] = b;
  }
  out.ok = true;
  return out;
}

Rat very_strange_lhs(const InnerAutomorphism& a) {
  i64 m = a.order();
  auto dims = eigenspace_dims(a);
  i64 total = 0;
  for (i64 d : dims) total += d;
  Rat lhs = Rat(total, 24);
  Rat corr(0);
  for (i64 j = 1; j < m; ++j) corr += Rat(j * (m - j)) * Rat(dims[static_cast<size_t>(j)]);
  lhs -= corr / Rat(4 * m * m);
  return lhs;
}

Rat very_strange_rhs(const InnerAutomorphism& a) {
  Rat rhs(0);
  for (size_t k = 0; k < a.components.size(); ++k) {
    const auto& c = a.components[k];
    const RootSystem& rs = generate_roots(c.type);
    i64 hv = dual_coxeter(c.type);
    VecQ diff = delta(a, k) - rs.weyl_vector / Rat(hv);
    rhs += Rat(hv, 2) * rs.inner(diff, diff);
  }
  return rhs;
}

std::vector<i64> sigma_u_coords(SimpleLieType type) {
  const RootSystem& rs = generate_roots(type);
  i64 l = lacing(type);
  std::vector<i64> s(static_cast<size_t>(type.rank) + 1, 0);
  s[0] = l;
  for (int i = 0; i < type.rank; ++i)
    s[static_cast<size_t>(i) + 1] = rs.bilinear(i, i) == Rat(2) ? l : 1;
  return s;
}

InnerAutomorphism sigma_u(const AffineStructure& s) {
  std::vector<KacComponent> comps;
  for (const auto& c : s.components)
    for (int k = 0; k < c.multiplicity; ++k)
      comps.push_back({c.type, sigma_u_coords(c.type)});
  return InnerAutomorphism(std::move(comps));
}

}  // namespace gdhkit
