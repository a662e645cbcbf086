#pragma once

// The classification engine: matching affine structures against Conway-group
// frame-shape data, generalised-deep-hole filters, and the shifted orbit
// enumerator that parametrises conjugacy classes over a fixed isometry.

#include "gdhkit/affine.hpp"
#include "gdhkit/dimform.hpp"
#include "gdhkit/leech.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gdhkit {

struct Co0Class {
  std::string name;
  CycleShape shape;
  i64 fixed_rank = 0;

  i64 order() const { return shape.order(); }
};

// JSON {"classes": [{"name": ..., "shape": ...}, ...]}; validates degree 24
// and even fixed rank per class.
std::vector<Co0Class> load_co0_table(const std::string& path);

struct Co0FilterStats {
  size_t total = 0;
  size_t with_fixed_space = 0;   // fixed_rank > 0
  size_t anomaly_below_one = 0;  // of those, vacuum anomaly < 1
};

Co0FilterStats co0_filter_stats(const std::vector<Co0Class>& classes);

struct CandidatePair {
  AffineStructure structure;
  Co0Class co0_class;
  i64 n = 1;  // order_lcm(structure)
};

// All (structure, class) pairs with matching fixed rank, class order dividing
// order_lcm, and 1/(1 - rho_nu) = level_lcm.  Throws if any structure would
// appear in more than one pair.
std::vector<CandidatePair> candidate_pairs(const std::vector<AffineStructure>& structures,
                                           const std::vector<Co0Class>& classes);

// True iff twisted_weight(g^i) >= 1 for every i in Z_n coprime to n.
bool extremality_necessary(const LeechAutomorphism& g, i64 n);

// ---- Finite quotient orbit machinery ----

struct QuotientSpace {
  std::vector<i64> moduli;  // Z/s_1 x ... x Z/s_r (s_i >= 1)

  i64 size() const;
  i64 index_of(const std::vector<i64>& coords) const;
  std::vector<i64> coords_of(i64 index) const;
};

struct QuotientAffineMap {
  MatL linear;  // row-vector action c -> c * linear + shift (mod moduli)
  VecL shift;
};

struct Orbit {
  std::vector<i64> representative;  // minimal index in the scan order
  i64 size = 0;
};

// Partitions the space into orbits under the closure of the given affine
// maps.  Generators must be well defined on the quotient (checked) and
// invertible on it; the space size must not exceed `cap`.
std::vector<Orbit> orbit_enumerate(const QuotientSpace& space,
                                   const std::vector<QuotientAffineMap>& generators,
                                   i64 cap = 100000000);

// (Lambda^nu / n) / pi_nu(Lambda) in Smith normal form coordinates, with the
// data needed to map representatives back to shift vectors and to turn
// centraliser elements into affine maps.
struct LatticeQuotient {
  QuotientSpace space;
  MatQ qbasis;   // rows: basis of (1/n) Lambda^nu in Leech basis coordinates
  MatL v;        // SNF transform: canonical coords c = t * v mod moduli
  MatL v_inv;
  VecQ s_nu;     // doubling shift of the isometry, Leech basis coordinates
};

LatticeQuotient build_lattice_quotient(const LatticeIsometry& iso, i64 n);

// The s_nu-shifted action tau.f = tau f + (tau - id) s_nu of a centraliser
// element given by its Leech-basis matrix.  Throws when tau does not commute
// with the isometry or does not preserve the quotient.
QuotientAffineMap shifted_action(const LatticeQuotient& q, const LatticeIsometry& iso,
                                 const MatL& tau);

// Shift vector (Leech basis coordinates) of a canonical representative.
VecQ quotient_element(const LatticeQuotient& q, const std::vector<i64>& coords);

// ---- Generalised deep hole pipeline ----

enum class TriState { Holds, Fails, Unknown };

using RankConditionFn = std::function<TriState(const LeechAutomorphism&, i64)>;

struct GdhClassReport {
  std::vector<i64> rep_coords;
  i64 orbit_size = 0;
  i64 order = 0;
  Rat weight;
  i64 type = 0;
  bool extremal_necessary = false;
  TriState rank_condition = TriState::Unknown;
};

struct GdhReport {
  std::string class_name;
  i64 n = 0;
  i64 orbit_count = 0;           // all orbits of the shifted action
  i64 classes_of_order_n = 0;    // orbits whose automorphism has order n
  i64 non_type_zero = 0;
  i64 type_zero = 0;
  std::vector<GdhClassReport> classes;  // only the order-n ones
};

// Classifies the automorphisms of order n over the given isometry using the
// supplied centraliser generators; rank_condition defaults to Unknown.
GdhReport gdh_pipeline(const LatticeIsometry& iso, i64 n,
                       const std::vector<MatL>& centralizer_generators,
                       const RankConditionFn& rank_condition = {},
                       bool compute_extremality = true);

// Centraliser file: JSON {"class": ..., "generators": [matrix, ...]}.
std::vector<MatL> load_centralizer_generators(const std::string& path);

}  // namespace gdhkit
