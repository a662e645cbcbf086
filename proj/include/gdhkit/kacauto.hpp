#pragma once

// Finite-order inner automorphisms of semisimple Lie algebras in Kac
// coordinates: eigenspace gradings, quasirationality and cycle shapes, both
// sides of the very strange formula, and the distinguished automorphism
// sigma_u with delta_i = rho_i / h_i^vee.

#include "gdhkit/affine.hpp"
#include "gdhkit/rootsys.hpp"

#include <map>
#include <string>
#include <vector>

namespace gdhkit {

struct CycleShape {
  // t -> b_t, zero entries omitted; b_t may be negative.
  std::map<i64, i64> exponents;

  i64 degree() const;           // sum of t * b_t
  i64 fixed_rank() const;       // sum of b_t
  i64 order() const;            // lcm of the t with b_t != 0 (1 for empty)
  bool operator==(const CycleShape&) const = default;

  std::string str() const;                       // "1^{-24} 2^{24}"
  static CycleShape parse(const std::string&);   // accepts "2^12", "1^{8} 2^{8}", "1 23"
};

struct KacComponent {
  SimpleLieType type;
  std::vector<i64> coords;  // s_0, s_1, ..., s_l

  // Sum a_i s_i after normalisation (gcd of the coordinates divided out).
  i64 order() const;
};

struct InnerAutomorphism {
  std::vector<KacComponent> components;

  explicit InnerAutomorphism(std::vector<KacComponent> comps);

  i64 order() const;  // lcm of the component orders
};

// The vector delta with (alpha_i, delta) = s_i / m on one component, in
// simple-root coordinates of that component.
VecQ delta(const InnerAutomorphism& a, size_t component);

// Eigenspace dimensions of one component under its own order.
std::vector<i64> eigenspace_dims(const InnerAutomorphism& a, size_t component);

// Eigenspace dimensions of the direct sum under the global order.
std::vector<i64> eigenspace_dims(const InnerAutomorphism& a);

struct CycleShapeOutcome {
  bool ok = false;
  CycleShape shape;
  // offending eigenvalue indices when not quasirational
  i64 bad_i = -1, bad_j = -1;
  std::string message;
};

// Recovers b_t from eigenvalue multiplicities; fails when the multiplicities
// do not only depend on gcd(j, m).
CycleShapeOutcome cycle_shape(const std::vector<i64>& dims, i64 m);

Rat very_strange_lhs(const InnerAutomorphism& a);
Rat very_strange_rhs(const InnerAutomorphism& a);

// Kac coordinates (s_0..s_l) of sigma_u on one simple type: lacing on the
// affine node and on each long root node, 1 on every short root node.
std::vector<i64> sigma_u_coords(SimpleLieType type);

// sigma_u on a whole affine structure (levels are irrelevant to the
// automorphism; multiplicities expand to separate components).
InnerAutomorphism sigma_u(const AffineStructure& s);

}  // namespace gdhkit
