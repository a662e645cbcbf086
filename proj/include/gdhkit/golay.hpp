#pragma once

// The extended binary Golay code on 24 points, as 24-bit masks.

#include <array>
#include <cstdint>
#include <vector>

namespace gdhkit {

struct GolayCode {
  std::array<uint32_t, 12> generators{};
  std::vector<uint32_t> codewords;  // all 4096, sorted

  bool contains(uint32_t word) const;
  std::array<int, 25> weight_distribution() const;
  int min_distance() const;

  // Syndrome of an arbitrary 24-bit word (0 iff codeword).
  uint32_t reduce(uint32_t word) const;
};

// Built from the length-23 quadratic-residue code extended by a parity bit;
// the classical invariants (self-dual, weights 0/8/12/16/24, 759 octads)
// are verified on construction.
const GolayCode& build_golay();

// True when the coordinate permutation preserves the code.
bool is_code_automorphism(const GolayCode& code, const std::array<int, 24>& perm);

}  // namespace gdhkit
