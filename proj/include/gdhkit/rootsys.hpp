#pragma once

// Root systems of the simple Lie types A-G with exact rational arithmetic.
// Roots are stored as integer coefficient vectors in the simple-root basis;
// the geometry lives in the bilinear form, normalised so long roots have
// squared norm 2.  Simple roots follow Bourbaki numbering (G2 ordered with
// the long root first so that sigma_u Kac coordinates read (3,3,1)).

#include "gdhkit/linalg.hpp"

#include <compare>
#include <string>
#include <vector>

namespace gdhkit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleLieType {
  Family family;
  int rank;

  auto operator<=>(const SimpleLieType&) const = default;

  bool valid() const;
  std::string str() const;                      // "D24"
  static SimpleLieType parse(const std::string& s);
};

struct RootSystem {
  SimpleLieType type;
  MatL roots;          // rows: all roots, coefficients in the simple-root basis
  MatQ bilinear;       // (alpha_i, alpha_j)
  MatL cartan;         // cartan(i,j) = <alpha_i, alpha_j^vee>
  VecQ weyl_vector;    // rho in simple-root coordinates
  VecL highest_root;   // theta coefficients
  VecL kac_labels;     // a_1..a_l (a_0 = 1)

  Eigen::Index root_count() const { return roots.rows(); }
  int rank() const { return type.rank; }

  // (x, y) for coefficient vectors.
  Rat inner(const VecL& x, const VecL& y) const;
  Rat inner(const VecQ& x, const VecQ& y) const;
  Rat norm_sq(const VecL& x) const { return inner(x, x); }
};

// Reflection closure from the Cartan matrix; deterministic root ordering.
// Throws std::invalid_argument for an invalid rank/family combination.
const RootSystem& generate_roots(SimpleLieType type);

int dual_coxeter(SimpleLieType type);
int dimension(SimpleLieType type);
int lacing(SimpleLieType type);
Rat weyl_norm_sq(SimpleLieType type);

}  // namespace gdhkit
