#pragma once

#include <string>
#include <vector>

#include "mubcoh/types.hpp"

namespace mubcoh {

/// An ordered orthonormal basis; column j of `kets` is the j-th ket.
struct OrthonormalBasis {
  std::string label;
  Matrix kets;

  Index dim() const { return kets.rows(); }
  Vector ket(Index j) const { return kets.col(j); }
};

/// Validates a candidate basis: square, finite, and unitary within tol
/// (which covers unit norms and pairwise orthogonality). With renormalize,
/// each ket is first rescaled to unit norm; directions are never altered.
/// Throws InvalidBasis on failure.
OrthonormalBasis make_basis(std::string label, Matrix kets, Real tol = kStateTol,
                            bool renormalize = false);

/// A family of bases sharing one dimension, pairwise mutually unbiased by
/// construction for the built-in families.
struct MubSet {
  Index dim = 0;
  std::vector<OrthonormalBasis> bases;
};

/// The three single-qubit bases: eigenvectors of sigma_z, sigma_x, sigma_y
/// (labels "z", "x", "y").
MubSet pauli_mubs();

/// The four dimension-3 bases: the computational basis plus three
/// Fourier-type bases built from the primitive cube root of unity
/// (labels "computational", "fourier", "fourier-t1", "fourier-t2").
MubSet dim3_mubs();

/// Self-tensors every basis of `source`: the new kets are |i> (x) |j> in
/// lexicographic (i, j) order, so ket index i*d + j. Labels are doubled
/// ("z" -> "zz") for single-character labels, joined with "*" otherwise.
MubSet build_amub(const MubSet& source);

struct OverlapReport {
  bool passed = false;
  Real max_deviation = 0.0;
  Real target = 0.0;
};

/// Mutual unbiasedness: every squared overlap | <b1_i | b2_j> |^2 equals 1/d
/// within tol. Throws DimensionMismatch if the bases disagree on dimension.
OverlapReport check_unbiased(const OrthonormalBasis& b1, const OrthonormalBasis& b2, Real tol);

/// The weaker tensor-pair property: every unsquared overlap modulus
/// | <b1_i | b2_j> | equals 1/d within tol, where both bases live in
/// dimension d*d. Throws DimensionMismatch if shapes disagree with d.
OverlapReport check_amub(const OrthonormalBasis& b1, const OrthonormalBasis& b2, Index d,
                         Real tol);

}  // namespace mubcoh
