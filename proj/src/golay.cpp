#include "gdhkit/golay.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gdhkit {

bool GolayCode::contains(uint32_t word) const {
  return std::binary_search(codewords.begin(), codewords.end(), word & 0xffffffu);
}

std::array<int, 25> GolayCode::weight_distribution() const {
  std::array<int, 25> dist{};
  for (uint32_t w : codewords) dist[static_cast<size_t>(std::popcount(w))] += 1;
  return dist;
}

int GolayCode::min_distance() const {
  int best = 24;
  for (uint32_t w : codewords)
    if (w != 0) best = std::min(best, std::popcount(w));
  return best;
}

uint32_t GolayCode::reduce(uint32_t word) const {
  uint32_t w = word & 0xffffffu;
  // Row-reduce against generators pivoted on their lowest set bit.
  for (uint32_t g : generators) {
    uint32_t pivot = g & (~g + 1);
    if (w & pivot) w ^= g;
  }
  return w;
}

namespace {

GolayCode construct() {
  // Binary quadratic-residue code of length 23 with generator polynomial
  // x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, extended by an overall parity
  // bit at position 23.
  const uint32_t gpoly = (1u << 11) | (1u << 10) | (1u << 6) | (1u << 5) | (1u << 4) | (1u << 2) | 1u;
  GolayCode code;
  for (int i = 0; i < 12; ++i) {
    uint32_t word = gpoly << i;  // degree <= 22, fits in 23 bits
    if (std::popcount(word) % 2 != 0) word |= 1u << 23;
    code.generators[static_cast<size_t>(i)] = word;
  }
  // Put the generators into row echelon form over F2 (lowest bit pivots).
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < i; ++j) {
      uint32_t pivot = code.generators[static_cast<size_t>(j)] &
                       (~code.generators[static_cast<size_t>(j)] + 1);
      if (code.generators[static_cast<size_t>(i)] & pivot)
        code.generators[static_cast<size_t>(i)] ^= code.generators[static_cast<size_t>(j)];
    }
    if (code.generators[static_cast<size_t>(i)] == 0)
      throw std::logic_error("golay: dependent generators");
  }
  code.codewords.reserve(4096);
  for (uint32_t mask = 0; mask < 4096; ++mask) {
    uint32_t w = 0;
    for (int i = 0; i < 12; ++i)
      if (mask & (1u << i)) w ^= code.generators[static_cast<size_t>(i)];
    code.codewords.push_back(w);
  }
  std::sort(code.codewords.begin(), code.codewords.end());

  // Validate the classical invariants; any construction slip fails loudly.
  auto dist = code.weight_distribution();
  if (dist[0] != 1 || dist[8] != 759 || dist[12] != 2576 || dist[16] != 759 || dist[24] != 1)
    throw std::logic_error("golay: wrong weight distribution");
  for (int w = 0; w < 25; ++w)
    if (dist[static_cast<size_t>(w)] != 0 && w % 4 != 0)
      throw std::logic_error("golay: weight not divisible by 4");
  for (uint32_t a : code.generators)
    for (uint32_t b : code.generators)
      if (std::popcount(a & b) % 2 != 0) throw std::logic_error("golay: not self-orthogonal");
  return code;
}

}  // namespace

const GolayCode& build_golay() {
  static const GolayCode code = construct();
  return code;
}

bool is_code_automorphism(const GolayCode& code, const std::array<int, 24>& perm) {
  for (uint32_t g : code.generators) {
    uint32_t image = 0;
    for (int i = 0; i < 24; ++i)
      if (g & (1u << i)) image |= 1u << perm[static_cast<size_t>(i)];
    if (!code.contains(image)) return false;
  }
  return true;
}

}  // namespace gdhkit
