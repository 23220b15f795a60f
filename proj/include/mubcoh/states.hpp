#pragma once

#include "mubcoh/linalg.hpp"
#include "mubcoh/types.hpp"

namespace mubcoh {

/// Point in the closed unit ball; (0, 0, 0) is the maximally mixed state.
struct BlochVector {
  Real x = 0.0;
  Real y = 0.0;
  Real z = 0.0;

  Real norm_squared() const { return x * x + y * y + z * z; }
};

/// Qubit state (1/2)(I + x sigma_x + y sigma_y + z sigma_z).
/// Throws BlochNormExceeded if |r|^2 > 1 + 1e-12.
DensityMatrix bloch_state(const BlochVector& v);

/// Placement of the off-diagonal coupling in a one-parameter-family
/// dimension-3 Hermitian matrix: Corners couples levels 0 and 2,
/// Lower couples 1 and 2, Upper couples 0 and 1.
enum class XStateVariant { Corners, Lower, Upper };

/// Real parameters (x, y, z): x and y are two diagonal weights (the third
/// is 1 - x - y) and z is the real off-diagonal coupling.
struct XStateParams {
  XStateVariant variant = XStateVariant::Corners;
  Real x = 0.0;
  Real y = 0.0;
  Real z = 0.0;
};

/// A Hermitian unit-trace matrix that may or may not be positive
/// semidefinite; `physical` records the PSD check at tolerance 1e-9.
struct HermitianState {
  Matrix matrix;
  bool physical = false;
  Real min_eigenvalue = 0.0;
};

/// Builds the dimension-3 matrix for `params`. With require_physical the
/// matrix must be PSD within 1e-9, else NotPositive is thrown.
HermitianState x3_state(const XStateParams& params, bool require_physical = false);

/// Correlation components of a two-qubit Bell-diagonal state; each must
/// lie in [-1, 1] (ParamOutOfRange otherwise).
struct CorrelationTriple {
  Real c1 = 0.0;
  Real c2 = 0.0;
  Real c3 = 0.0;
};

/// (1/4)(I (x) I + c1 sx (x) sx + c2 sy (x) sy + c3 sz (x) sz).
/// Hermitian and unit trace for every triple in the cube; PSD only on the
/// physical tetrahedron, recorded in `physical`.
HermitianState bell_diagonal(const CorrelationTriple& c, bool require_physical = false);

/// True iff bell_diagonal(c) is PSD within tol.
bool is_physical_triple(const CorrelationTriple& c, Real tol = kStateTol);

/// Werner family on p in [0, 1]: singlet weight p mixed into the identity.
DensityMatrix werner(Real p);

/// Isotropic family on fidelity F in [0, 1]: maximally entangled weight F
/// mixed into the identity.
DensityMatrix isotropic(Real F);

/// Runs the full density-matrix validation on a HermitianState.
DensityMatrix to_density(const HermitianState& s, Real tol = kStateTol);

}  // namespace mubcoh
