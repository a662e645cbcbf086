#include "gdhkit/affine.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gdhkit {

namespace {

// Canonical component order: dimension descending, then family letter
// ascending, then level ascending.
bool canonical_less(const AffineComponent& a, const AffineComponent& b) {
  int da = dimension(a.type), db = dimension(b.type);
  if (da != db) return da > db;
  if (a.type.family != b.type.family) return a.type.family < b.type.family;
  if (a.type.rank != b.type.rank) return a.type.rank > b.type.rank;
  return a.level < b.level;
}

}  // namespace

bool canonical_structure_less(const AffineStructure& a, const AffineStructure& b) {
  // Component dimension sequences first (descending within a structure),
  // family letters breaking ties between otherwise equal rows.
  auto expand = [](const AffineStructure& s) {
    std::vector<const AffineComponent*> seq;
    for (const auto& c : s.components)
      for (int k = 0; k < c.multiplicity; ++k) seq.push_back(&c);
    return seq;
  };
  auto ea = expand(a), eb = expand(b);
  size_t upto = std::min(ea.size(), eb.size());
  for (size_t i = 0; i < upto; ++i) {
    int da = dimension(ea[i]->type), db = dimension(eb[i]->type);
    if (da != db) return da > db;
  }
  if (ea.size() != eb.size()) return ea.size() < eb.size();
  for (size_t i = 0; i < upto; ++i) {
    const auto& ta = ea[i]->type;
    const auto& tb = eb[i]->type;
    if (ta.family != tb.family) return ta.family < tb.family;
    if (ta.rank != tb.rank) return ta.rank > tb.rank;
    if (ea[i]->level != eb[i]->level) return ea[i]->level < eb[i]->level;
  }
  return false;
}

AffineStructure::AffineStructure(std::vector<AffineComponent> comps) {
  std::map<std::pair<SimpleLieType, int>, int> folded;
  for (const auto& c : comps) {
    if (!c.type.valid()) throw std::invalid_argument("AffineStructure: invalid type");
    if (c.level < 1) throw std::invalid_argument("AffineStructure: level must be positive");
    if (c.multiplicity < 1) throw std::invalid_argument("AffineStructure: multiplicity must be positive");
    folded[{c.type, c.level}] += c.multiplicity;
  }
  for (const auto& [key, mult] : folded)
    components.push_back({key.first, key.second, mult});
  std::sort(components.begin(), components.end(), canonical_less);
}

std::string AffineStructure::machine_str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : components) {
    if (!first) os << ", ";
    first = false;
    os << c.type.str() << "@" << c.level;
    if (c.multiplicity > 1) os << " x" << c.multiplicity;
  }
  return os.str();
}

std::string AffineStructure::pretty_str() const {
  std::ostringstream os;
  for (const auto& c : components) {
    os << static_cast<char>(c.type.family) << "_{" << c.type.rank << "," << c.level << "}";
    if (c.multiplicity > 1) os << "^{" << c.multiplicity << "}";
  }
  return os.str();
}

AffineStructure AffineStructure::parse(const std::string& s) {
  std::vector<AffineComponent> comps;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == ',')) ++i; };
  auto read_int = [&]() -> int {
    size_t start = i;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("AffineStructure::parse: expected number in '" + s + "'");
    return std::stoi(s.substr(start, i - start));
  };
  skip_ws();
  while (i < s.size()) {
    char fam = s[i];
    if (fam < 'A' || fam > 'G')
      throw std::invalid_argument("AffineStructure::parse: bad family letter in '" + s + "'");
    ++i;
    if (i < s.size() && s[i] == '_') ++i;
    bool braced = i < s.size() && s[i] == '{';
    if (braced) ++i;
    int rank = read_int();
    int level = 1;
    if (i < s.size() && (s[i] == ',' && braced)) { ++i; level = read_int(); }
    if (braced) {
      if (i >= s.size() || s[i] != '}') throw std::invalid_argument("AffineStructure::parse: missing '}'");
      ++i;
    } else if (i < s.size() && s[i] == '@') {
      ++i;
      level = read_int();
    }
    int mult = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      bool eb = i < s.size() && s[i] == '{';
      if (eb) ++i;
      mult = read_int();
      if (eb) {
        if (i >= s.size() || s[i] != '}') throw std::invalid_argument("AffineStructure::parse: missing '}'");
        ++i;
      }
    } else {
      skip_ws();
      if (i < s.size() && s[i] == 'x') {
        ++i;
        mult = read_int();
      }
    }
    comps.push_back({SimpleLieType{static_cast<Family>(fam), rank}, level, mult});
    skip_ws();
  }
  if (comps.empty()) throw std::invalid_argument("AffineStructure::parse: empty structure");
  return AffineStructure(std::move(comps));
}

int total_dim(const AffineStructure& s) {
  int d = 0;
  for (const auto& c : s.components) d += dimension(c.type) * c.multiplicity;
  return d;
}

int total_rank(const AffineStructure& s) {
  int r = 0;
  for (const auto& c : s.components) r += c.type.rank * c.multiplicity;
  return r;
}

RatioOutcome ratio(const AffineStructure& s) {
  if (s.components.empty())
    throw std::invalid_argument("ratio: empty affine structure");
  Rat common(0);
  bool first = true;
  for (const auto& c : s.components) {
    Rat r = Rat(dual_coxeter(c.type), c.level);
    if (first) { common = r; first = false; }
    else if (r != common) {
      return {RatioOutcome::Kind::Mismatch, Rat(0),
              "ratio mismatch: " + common.str() + " vs " + r.str()};
    }
  }
  Rat target = Rat(total_dim(s) - 24, 24);
  if (common != target) {
    return {RatioOutcome::Kind::TraceViolated, Rat(0),
            "trace identity violated: common ratio " + common.str() +
                " but (dim-24)/24 = " + target.str()};
  }
  return {RatioOutcome::Kind::Ok, common, ""};
}

i64 order_lcm(const AffineStructure& s) {
  i64 n = 1;
  for (const auto& c : s.components)
    n = lcm_i64(n, static_cast<i64>(lacing(c.type)) * dual_coxeter(c.type));
  return n;
}

i64 level_lcm(const AffineStructure& s) {
  i64 n = 1;
  for (const auto& c : s.components)
    n = lcm_i64(n, static_cast<i64>(lacing(c.type)) * c.level);
  return n;
}

namespace {

std::vector<SimpleLieType> all_types_up_to_rank(int max_rank) {
  std::vector<SimpleLieType> types;
  for (int l = 1; l <= max_rank; ++l) types.push_back({Family::A, l});
  for (int l = 2; l <= max_rank; ++l) types.push_back({Family::B, l});
  for (int l = 3; l <= max_rank; ++l) types.push_back({Family::C, l});
  for (int l = 4; l <= max_rank; ++l) types.push_back({Family::D, l});
  for (int l = 6; l <= 8; ++l) types.push_back({Family::E, l});
  types.push_back({Family::F, 4});
  types.push_back({Family::G, 2});
  return types;
}

struct Candidate {
  SimpleLieType type;
  int level;
  int dim;
  int rank;
};

void search(const std::vector<Candidate>& cands, size_t from, int dim_left, int rank_left,
            std::vector<AffineComponent>& picked, std::vector<AffineStructure>& out) {
  if (dim_left == 0) {
    if (!picked.empty()) out.push_back(AffineStructure(picked));
    return;
  }
  for (size_t i = from; i < cands.size(); ++i) {
    const Candidate& c = cands[i];
    if (c.dim > dim_left || c.rank > rank_left) continue;
    picked.push_back({c.type, c.level, 1});
    search(cands, i, dim_left - c.dim, rank_left - c.rank, picked, out);
    picked.pop_back();
  }
}

}  // namespace

std::vector<AffineStructure> enumerate_eq1() {
  // The ratio h^vee/k of every component is at most max h^vee over the types
  // of rank <= 24, so total_dim = 24(ratio+1) is bounded.
  const int max_rank = 24;
  auto types = all_types_up_to_rank(max_rank);
  std::vector<std::pair<int, int>> constants;  // (h^vee, dim) per type
  int max_hv = 0;
  for (auto t : types) {
    constants.push_back({dual_coxeter(t), dimension(t)});
    max_hv = std::max(max_hv, constants.back().first);
  }
  int max_dim = 24 * (max_hv + 1);

  std::vector<AffineStructure> out;
  for (int total = 25; total <= max_dim; ++total) {
    // ratio = (total - 24)/24; a type enters with level k = h^vee/ratio.
    std::vector<Candidate> cands;
    for (size_t ti = 0; ti < types.size(); ++ti) {
      SimpleLieType t = types[ti];
      i64 num = static_cast<i64>(constants[ti].first) * 24;
      if (num % (total - 24) != 0) continue;
      i64 k = num / (total - 24);
      if (k < 1) continue;
      int d = constants[ti].second;
      if (d > total) continue;
      cands.push_back({t, static_cast<int>(k), d, t.rank});
    }
    std::vector<AffineComponent> picked;
    search(cands, 0, total, max_rank, picked, out);
  }

  std::sort(out.begin(), out.end(), [](const AffineStructure& a, const AffineStructure& b) {
    int da = total_dim(a), db = total_dim(b);
    if (da != db) return da < db;
    return canonical_structure_less(a, b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gdhkit
