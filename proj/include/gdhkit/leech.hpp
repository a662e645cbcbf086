#pragma once

// The Leech lattice in a fixed integer basis (ambient coordinates carry a
// factor sqrt(8), i.e. the ambient form is I/8), together with the
// automorphism arithmetic of the lattice vertex-algebra picture: cycle
// shapes of isometries, fixed and projected lattices, order doubling and
// its correcting shift, orders and conformal weights of composite
// automorphisms.

#include "gdhkit/golay.hpp"
#include "gdhkit/kacauto.hpp"
#include "gdhkit/lattice.hpp"

#include <string>

namespace gdhkit {

// Basis rows in ambient coordinates: integer matrix B with gram B B^T / 8,
// built by Hermite reduction of the standard generating set (doubled Golay
// words, 4(e_i +- e_j), and the odd vector (-3,1,...,1)).
const IntegerLattice& build_leech();

struct LatticeIsometry {
  MatL matrix;  // action on basis coordinates: x -> x * matrix
  i64 order = 1;
  std::string name;
};

// Validates gram preservation and computes the order.
LatticeIsometry make_isometry(MatL m, std::string name = "");

// Signed coordinate permutation: e_i -> sign_i e_{perm[i]} in ambient
// coordinates; signs with mask bit i set are negative.  Preserves the Leech
// lattice iff the permutation preserves the Golay code and the sign mask is
// a codeword (both are checked through the resulting integral matrix).
LatticeIsometry isometry_from_signed_permutation(const std::array<int, 24>& perm,
                                                 uint32_t sign_mask, std::string name = "");

struct LeechAutomorphism {
  LatticeIsometry iso;
  VecQ shift;  // sigma-part in basis coordinates, inside the fixed subspace
};

CycleShape cycle_shape_of(const LatticeIsometry& iso);

IntegerLattice fixed_lattice(const LatticeIsometry& iso);
IntegerLattice projection_lattice(const LatticeIsometry& iso);

// Basis-coordinate rows of the fixed lattice (saturated kernel of M - I).
MatI fixed_lattice_rows(const LatticeIsometry& iso);

// n^rank(fixed) / |disc(fixed)|; throws when not an integer.
Int quotient_order(const LatticeIsometry& iso, i64 n);

bool order_doubling(const LatticeIsometry& iso);

// The correcting vector s_nu in (1/2m) Lambda^nu (zero without doubling);
// canonical choice of minimal norm, ties broken lexicographically on the
// fixed-lattice coordinates.
VecQ doubling_vector(const LatticeIsometry& iso);

// Order of nu-hat sigma_{s_nu + f} where shift = s_nu + f: lcm(m, k) with k
// minimal such that k f lies in the fixed lattice.
i64 automorphism_order(const LeechAutomorphism& a);

// Vacuum anomaly of the cycle shape plus half the minimal norm over the
// coset shift + pi_nu(Lambda).
Rat twisted_weight(const LeechAutomorphism& a);

// n^2 rho mod n for rho = twisted_weight(a); requires order(a) = n.
i64 type_of_automorphism(const LeechAutomorphism& a, i64 n);

// g^i modelled by powering the isometry and scaling the shift.
LeechAutomorphism power(const LeechAutomorphism& a, i64 i);

// JSON I/O: {"name": ..., "matrix": [[...], ...]} in the fixed basis.
LatticeIsometry load_isometry(const std::string& path);

}  // namespace gdhkit
