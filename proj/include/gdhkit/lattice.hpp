#pragma once

// Exact integer/rational lattice core: Hermite and Smith normal forms,
// saturated kernels, dual lattices and discriminants, rational LLL, and
// Fincke-Pohst enumeration for short vectors and coset minima.  All
// decision-bearing arithmetic is exact; doubles only seed interval
// endpoints, which are then fixed up exactly.

#include "gdhkit/linalg.hpp"

#include <atomic>
#include <optional>
#include <vector>

namespace gdhkit {

struct IntegerLattice {
  MatQ basis;  // rows = basis vectors in ambient coordinates
  MatQ form;   // ambient bilinear form

  static IntegerLattice from_basis(MatQ basis, Rat form_scale);
  static IntegerLattice from_gram(MatQ gram);

  MatQ gram() const;  // basis * form * basis^T
  Eigen::Index rank() const { return basis.rows(); }
};

struct CosetVector {
  IntegerLattice lattice;
  VecQ offset;  // ambient coordinates; must lie in the rational span of the basis
};

struct HnfResult {
  MatI h;  // row Hermite normal form
  MatI u;  // unimodular, h = u * m
};

// Row-style HNF: pivots positive, entries above a pivot reduced into [0, pivot).
HnfResult hnf(const MatI& m);

struct SnfResult {
  MatI s;  // diagonal, s = u * m * v, s_i | s_{i+1}
  MatI u;
  MatI v;
};

SnfResult snf(const MatI& m);

// Saturated basis of {x : x m = 0} as rows.
MatI left_kernel_saturated(const MatI& m);

// Lattice basis (rows) for the span of possibly dependent rational rows,
// canonicalised through a scaled integer HNF.
MatQ lattice_row_basis(const MatQ& rows);

struct DualResult {
  MatQ dual_basis;   // rows, ambient coordinates
  Rat discriminant;  // det(gram) = |L'/L| for integral lattices
  bool integral;     // discriminant is an integer
};

DualResult dual_and_discriminant(const IntegerLattice& lat);

struct LllResult {
  MatQ gram;  // reduced gram = u * g * u^T
  MatI u;
};

// Exact rational LLL (delta = 3/4) on a positive-definite gram matrix.
LllResult lll_reduce_gram(const MatQ& gram);

struct ShortVector {
  VecL coords;  // with respect to the lattice basis of the given gram
  Rat norm;
};

struct EnumerationOptions {
  bool include_sign_pairs = false;  // emit both v and -v
  bool use_lll = true;              // accelerator only; results identical without
  int threads = 1;
  const std::atomic<bool>* cancel = nullptr;
};

// All nonzero x with x G x^T <= bound, up to sign unless include_sign_pairs;
// lexicographically sorted coordinates.
std::vector<ShortVector> short_vectors(const MatQ& gram, const Rat& bound,
                                       const EnumerationOptions& opts = {});

std::vector<ShortVector> short_vectors(const IntegerLattice& lat, const Rat& bound,
                                       const EnumerationOptions& opts = {});

struct CvpResult {
  Rat norm;
  VecQ witness_coords;  // offset + integer vector, in basis coordinates
};

// Exact minimum of (x + offset) G (x + offset)^T over integer x.
CvpResult min_coset_norm_gram(const MatQ& gram, const VecQ& offset_coords,
                              bool use_lll = true);

// Minimum squared norm over the coset offset + L, with ambient witness.
struct CosetMinimum {
  Rat norm;
  VecQ witness;  // ambient coordinates
};

CosetMinimum min_coset_norm(const CosetVector& coset);

}  // namespace gdhkit
