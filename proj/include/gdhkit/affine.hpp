#pragma once

// Affine structures g_{1,k1}...g_{r,kr}: multisets of (simple type, level)
// pairs, the trace-identity ratio test, and the complete enumeration of all
// structures of rank at most 24 satisfying it.

#include "gdhkit/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdhkit {

struct AffineComponent {
  SimpleLieType type;
  int level = 1;
  int multiplicity = 1;

  auto operator<=>(const AffineComponent&) const = default;
};

struct AffineStructure {
  // Components in canonical order: dimension descending, then family letter,
  // then level, with equal entries folded into the multiplicity.
  std::vector<AffineComponent> components;

  explicit AffineStructure(std::vector<AffineComponent> comps = {});

  bool operator==(const AffineStructure&) const = default;

  std::string machine_str() const;  // "A1@2 x16, C3@8"
  std::string pretty_str() const;   // "A_{1,2}^{16}"
  static AffineStructure parse(const std::string& s);  // accepts both forms
};

int total_dim(const AffineStructure& s);
int total_rank(const AffineStructure& s);

struct RatioOutcome {
  enum class Kind { Ok, Mismatch, TraceViolated } kind;
  Rat value;      // the common ratio when kind == Ok
  std::string message;
};

// The common value h_i^vee / k_i, provided it is shared by every component
// and equals (total_dim - 24)/24.
RatioOutcome ratio(const AffineStructure& s);

// lcm over components of lacing * dual_coxeter (the order of sigma_u).
i64 order_lcm(const AffineStructure& s);

// lcm over components of lacing * level.
i64 level_lcm(const AffineStructure& s);

// Paper-style row order: expanded component sequences compared
// lexicographically under the canonical component order.
bool canonical_structure_less(const AffineStructure& a, const AffineStructure& b);

// All affine structures with total rank <= 24 satisfying the trace identity,
// deduplicated and sorted by (total dimension, canonical form).
std::vector<AffineStructure> enumerate_eq1();

}  // namespace gdhkit
