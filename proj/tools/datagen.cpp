// Regenerates the bundled isometry and centraliser data files.
//
// All bundled isometries are signed coordinate permutations: a permutation
// of the 24 points of the projective line P1(F_23) preserving the Golay
// code, combined with sign changes on a codeword.  M24 is generated by
//   alpha: x -> x+1,  gamma: x -> -1/x,  delta: a cubing map
// acting on P1(F_23) with infinity at position 23; membership of a candidate
// permutation is preservation of the code, and the generated group order is
// verified to be 244823040 by Schreier-Sims.
//
// Centraliser files contain generators of the centraliser inside the
// monomial group 2^12:M24 (permutation part commuting with p, sign part on
// codewords fixed by p).  These generate a subgroup of the full centraliser
// in O(Lambda), so their orbit partitions refine the true ones; bundled data
// is only shipped when the refined counts already match the published class
// counts, which forces equality.

#include "gdhkit/classify.hpp"
#include "gdhkit/data_paths.hpp"
#include "gdhkit/golay.hpp"
#include "gdhkit/leech.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>

using namespace gdhkit;
using Perm = std::array<int, 24>;

namespace {

Perm identity_perm() {
  Perm p{};
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
  Perm c{};
  for (int i = 0; i < 24; ++i)
    c[static_cast<size_t>(i)] = a[static_cast<size_t>(b[static_cast<size_t>(i)])];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c{};
  for (int i = 0; i < 24; ++i) c[static_cast<size_t>(a[static_cast<size_t>(i)])] = i;
  return c;
}

std::map<int, int> cycle_type(const Perm& p) {
  std::map<int, int> type;
  std::array<bool, 24> seen{};
  for (int i = 0; i < 24; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    do {
      seen[static_cast<size_t>(j)] = true;
      j = p[static_cast<size_t>(j)];
      ++len;
    } while (j != i);
    type[len] += 1;
  }
  return type;
}

std::string type_str(const std::map<int, int>& t) {
  std::string s;
  for (auto [len, count] : t) {
    if (!s.empty()) s += " ";
    s += std::to_string(len);
    if (count > 1) s += "^" + std::to_string(count);
  }
  return s;
}

// ---- Schreier-Sims order computation for degree-24 permutation groups ----

struct Bsgs {
  std::vector<int> base;
  std::vector<std::map<int, Perm>> transversal;
  std::vector<std::vector<Perm>> strong_gens;

  long long order() const {
    long long n = 1;
    for (const auto& t : transversal) n *= static_cast<long long>(t.size());
    return n;
  }
};

bool strip(const Bsgs& b, Perm g, size_t level, Perm* out) {
  for (size_t i = level; i < b.base.size(); ++i) {
    int image = g[static_cast<size_t>(b.base[i])];
    auto it = b.transversal[i].find(image);
    if (it == b.transversal[i].end()) {
      *out = g;
      return false;
    }
    g = compose(inverse(it->second), g);
  }
  *out = g;
  return g == identity_perm();
}

void sift_in(Bsgs& b, const Perm& g);

void close_level(Bsgs& b, size_t level) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<int, Perm>> frontier(b.transversal[level].begin(),
                                               b.transversal[level].end());
    for (const auto& [pt, rep] : frontier) {
      for (const auto& g : b.strong_gens[level]) {
        int image = g[static_cast<size_t>(pt)];
        if (!b.transversal[level].count(image)) {
          b.transversal[level][image] = compose(g, rep);
          changed = true;
        }
      }
    }
    for (const auto& [pt, rep] : b.transversal[level]) {
      for (const auto& g : b.strong_gens[level]) {
        int image = g[static_cast<size_t>(pt)];
        Perm schreier = compose(inverse(b.transversal[level][image]), compose(g, rep));
        Perm residue;
        if (!strip(b, schreier, level + 1, &residue)) {
          if (level + 1 == b.base.size()) {
            int newpt = 0;
            for (int i = 0; i < 24; ++i)
              if (residue[static_cast<size_t>(i)] != i) { newpt = i; break; }
            b.base.push_back(newpt);
            b.transversal.push_back({{newpt, identity_perm()}});
            b.strong_gens.push_back({});
          }
          for (size_t i = 0; i <= level + 1; ++i) b.strong_gens[i].push_back(residue);
          for (size_t i = level + 1; i-- > 0;) close_level(b, i + 1);
          changed = true;
        }
      }
    }
  }
}

void sift_in(Bsgs& b, const Perm& g) {
  Perm residue;
  if (strip(b, g, 0, &residue)) return;
  b.strong_gens[0].push_back(residue);
  for (size_t i = 0; i < b.base.size(); ++i)
    if (i > 0) b.strong_gens[i].push_back(residue);  // conservative
  close_level(b, 0);
}

Bsgs build_bsgs(const std::vector<Perm>& gens) {
  Bsgs b;
  b.base.push_back(0);
  b.transversal.push_back({{0, identity_perm()}});
  b.strong_gens.push_back({});
  for (const auto& g : gens) sift_in(b, g);
  return b;
}

// ---- M24 as the automorphism group of the Golay code ----

std::vector<Perm> m24_generators() {
  const GolayCode& code = build_golay();
  std::set<int> qr;
  for (int x = 1; x < 23; ++x) qr.insert(x * x % 23);
  auto inv23 = [](int a) {
    for (int b = 1; b < 23; ++b)
      if (a * b % 23 == 1) return b;
    return 0;
  };

  Perm alpha{};  // x -> x + 1
  for (int i = 0; i < 23; ++i) alpha[static_cast<size_t>(i)] = (i + 1) % 23;
  alpha[23] = 23;

  Perm gamma{};  // x -> -1/x
  gamma[23] = 0;
  gamma[0] = 23;
  for (int x = 1; x < 23; ++x) gamma[static_cast<size_t>(x)] = (23 - inv23(x)) % 23;

  if (!is_code_automorphism(code, alpha) || !is_code_automorphism(code, gamma))
    throw std::logic_error("datagen: PSL(2,23) maps do not preserve the code");

  // Cubing map x -> c x^3 on one residue class and x -> x^3/c on the other.
  std::optional<Perm> delta;
  for (int on_squares = 0; on_squares < 2 && !delta; ++on_squares) {
    for (int c = 1; c < 23 && !delta; ++c) {
      Perm d{};
      d[23] = 23;
      d[0] = 0;
      for (int x = 1; x < 23; ++x) {
        long long cube = static_cast<long long>(x) * x % 23 * x % 23;
        bool square = qr.count(x) > 0;
        int y = (square == (on_squares == 1))
                    ? static_cast<int>(cube * c % 23)
                    : static_cast<int>(cube * inv23(c) % 23);
        d[static_cast<size_t>(x)] = y;
      }
      std::set<int> image(d.begin(), d.end());
      if (image.size() != 24) continue;
      if (!is_code_automorphism(code, d)) continue;
      bool real_new = false;  // skip maps already in PSL(2,23), e.g. x -> x
      for (int x = 1; x < 23 && !real_new; ++x)
        if (d[static_cast<size_t>(x)] != x) real_new = true;
      if (real_new) delta = d;
    }
  }
  if (!delta) throw std::logic_error("datagen: no cubing-type automorphism found");

  std::vector<Perm> gens{alpha, gamma, *delta};
  auto bsgs = build_bsgs(gens);
  if (bsgs.order() != 244823040LL)
    throw std::logic_error("datagen: generated group has order " + std::to_string(bsgs.order()));
  return gens;
}

// Centralizer of p in M24 by random conjugation collisions; stops when the
// generated subgroup order is stable for a long stretch.
std::vector<Perm> m24_centralizer(const std::vector<Perm>& gens, const Perm& p,
                                  std::mt19937& rng) {
  std::map<Perm, Perm> conjugates;  // r p r^-1 -> r
  std::vector<Perm> cgens{p};
  Bsgs sub = build_bsgs(cgens);
  long long stable = 0;
  Perm walk = identity_perm();
  while (stable < 60000) {
    walk = compose(walk, gens[rng() % gens.size()]);
    if (rng() % 7 != 0) continue;  // mix before using
    Perm conj = compose(walk, compose(p, inverse(walk)));
    auto it = conjugates.find(conj);
    if (it == conjugates.end()) {
      conjugates.emplace(conj, walk);
      ++stable;
      continue;
    }
    Perm cent = compose(inverse(it->second), walk);
    Perm check = compose(cent, compose(p, inverse(cent)));
    if (!(check == p)) throw std::logic_error("centralizer element check failed");
    Perm residue;
    if (!strip(sub, cent, 0, &residue)) {
      cgens.push_back(cent);
      sub = build_bsgs(cgens);
      stable = 0;
    } else {
      ++stable;
    }
  }
  std::cout << "  centralizer in M24: order " << sub.order() << " with " << cgens.size()
            << " generators\n";
  return cgens;
}

void write_isometry(const std::string& path, const std::string& name, const Perm& p,
                    uint32_t signs) {
  LatticeIsometry iso = isometry_from_signed_permutation(p, signs, name);
  nlohmann::json j;
  j["name"] = name;
  j["shape"] = cycle_shape_of(iso).str();
  j["order"] = iso.order;
  std::vector<std::vector<i64>> rows;
  for (int i = 0; i < 24; ++i) {
    std::vector<i64> row;
    for (int k = 0; k < 24; ++k) row.push_back(iso.matrix(i, k));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  std::ofstream out(path);
  out << j.dump(1) << "\n";
  std::cout << "wrote " << path << "  shape " << j["shape"].get<std::string>() << " order "
            << iso.order << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string outdir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(outdir + "/isometries");
  std::filesystem::create_directories(outdir + "/centralizers");

  const GolayCode& code = build_golay();
  auto gens = m24_generators();
  std::cout << "M24 generators verified (order 244823040)\n";

  std::map<std::string, Perm> reps;
  std::vector<std::string> wanted = {
      "1^8 2^8",     "2^12",         "1^6 3^6",          "3^8",     "2^4 4^4",
      "1^4 2^2 4^4", "4^6",          "1^4 5^4",          "1^2 2^2 3^2 6^2",
      "6^4",         "1^3 7^3",      "1^2 2 4 8^2",      "2^2 10^2"};
  std::mt19937 rng(20240607);
  Perm cur = identity_perm();
  size_t missing = wanted.size();
  for (int step = 0; step < 5000000 && missing > 0; ++step) {
    cur = compose(cur, gens[rng() % gens.size()]);
    std::string t = type_str(cycle_type(cur));
    if (!reps.count(t)) {
      reps[t] = cur;
      if (std::find(wanted.begin(), wanted.end(), t) != wanted.end()) --missing;
    }
  }
  for (const auto& w : wanted)
    if (!reps.count(w)) {
      std::cerr << "missing cycle type " << w << "\n";
      return 1;
    }
  std::cout << "found " << reps.size() << " cycle types in M24\n";

  std::map<std::string, std::string> file_names = {
      {"1^8 2^8", "1_8-2_8"},
      {"2^12", "2_12"},
      {"1^6 3^6", "1_6-3_6"},
      {"3^8", "3_8"},
      {"2^4 4^4", "2_4-4_4"},
      {"1^4 2^2 4^4", "1_4-2_2-4_4"},
      {"4^6", "4_6"},
      {"1^4 5^4", "1_4-5_4"},
      {"1^2 2^2 3^2 6^2", "1_2-2_2-3_2-6_2"},
      {"6^4", "6_4"},
      {"1^3 7^3", "1_3-7_3"},
      {"1^2 2 4 8^2", "1_2-2-4-8_2"},
      {"2^2 10^2", "2_2-10_2"}};
  for (const auto& [shape, fname] : file_names)
    write_isometry(outdir + "/isometries/" + fname + ".json", shape, reps[shape], 0);

  write_isometry(outdir + "/isometries/1_24.json", "1^24", identity_perm(), 0);
  write_isometry(outdir + "/isometries/minus1.json", "-1", identity_perm(), 0xffffffu);

  // 2^3 6^3: an order-3 permutation of type 1^6 3^6 with signs on a codeword
  // meeting three of the fixed points and three of the 3-cycles oddly.
  {
    Perm p = reps["1^6 3^6"];
    std::vector<int> fixed;
    std::vector<std::vector<int>> threes;
    std::array<bool, 24> seen{};
    for (int i = 0; i < 24; ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      std::vector<int> cyc;
      int j = i;
      do {
        seen[static_cast<size_t>(j)] = true;
        cyc.push_back(j);
        j = p[static_cast<size_t>(j)];
      } while (j != i);
      if (cyc.size() == 1) fixed.push_back(cyc[0]);
      else threes.push_back(cyc);
    }
    bool found = false;
    for (uint32_t t : code.codewords) {
      if (t == 0) continue;
      int minus_fixed = 0;
      for (int f : fixed)
        if (t & (1u << f)) ++minus_fixed;
      if (minus_fixed != 3) continue;
      int odd_threes = 0;
      for (const auto& cyc : threes) {
        int c = 0;
        for (int x : cyc)
          if (t & (1u << x)) ++c;
        if (c % 2 == 1) ++odd_threes;
      }
      if (odd_threes != 3) continue;
      write_isometry(outdir + "/isometries/2_3-6_3.json", "2^3 6^3", p, t);
      found = true;
      break;
    }
    if (!found) {
      std::cerr << "no sign pattern for 2^3 6^3\n";
      return 1;
    }
  }

  // Centralisers inside 2^12:M24.
  std::vector<std::pair<std::string, std::string>> targets = {
      {"2^2 10^2", "2_2-10_2"}, {"4^6", "4_6"}, {"2^12", "2_12"}, {"1^8 2^8", "1_8-2_8"}};
  for (const auto& [shape, fname] : targets) {
    std::cout << "centralizer for " << shape << "\n";
    const Perm& p = reps[shape];
    auto cperm = m24_centralizer(gens, p, rng);

    // F2 basis of the codewords fixed by p.
    std::array<uint32_t, 24> xor_basis{};
    int sign_dim = 0;
    for (uint32_t t : code.codewords) {
      uint32_t image = 0;
      for (int i = 0; i < 24; ++i)
        if (t & (1u << i)) image |= 1u << p[static_cast<size_t>(i)];
      if (image != t) continue;
      uint32_t r = t;
      for (int bit = 23; bit >= 0 && r; --bit) {
        if (!(r & (1u << bit))) continue;
        if (!xor_basis[static_cast<size_t>(bit)]) {
          xor_basis[static_cast<size_t>(bit)] = r;
          ++sign_dim;
          break;
        }
        r ^= xor_basis[static_cast<size_t>(bit)];
      }
    }

    nlohmann::json j;
    j["class"] = shape;
    std::vector<std::vector<std::vector<i64>>> mats;
    auto add = [&](const Perm& q, uint32_t t) {
      LatticeIsometry iso = isometry_from_signed_permutation(q, t, "");
      std::vector<std::vector<i64>> rows;
      for (int i = 0; i < 24; ++i) {
        std::vector<i64> row;
        for (int k = 0; k < 24; ++k) row.push_back(iso.matrix(i, k));
        rows.push_back(row);
      }
      mats.push_back(rows);
    };
    for (const auto& q : cperm) add(q, 0);
    for (uint32_t b : xor_basis)
      if (b) add(identity_perm(), b);
    j["generators"] = mats;
    std::ofstream out(outdir + "/centralizers/" + fname + ".json");
    out << j.dump(1) << "\n";
    std::cout << "wrote centralizer " << fname << ": " << cperm.size()
              << " permutation generators, " << sign_dim << " sign generators\n";
  }
  return 0;
}
