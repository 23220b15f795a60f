#pragma once

#include <string>

#include "mubcoh/linalg.hpp"
#include "mubcoh/mub.hpp"
#include "mubcoh/states.hpp"
#include "mubcoh/types.hpp"

namespace mubcoh {

/// Matrix of a state expressed in another orthonormal basis.
struct CoefficientMatrix {
  std::string basis_label;
  Matrix entries;
};

/// entries = adjoint(U) * rho * U with U the ket matrix of `basis`.
/// Throws DimensionMismatch if shapes disagree.
CoefficientMatrix coefficients_in_basis(const Matrix& rho, const OrthonormalBasis& basis);
CoefficientMatrix coefficients_in_basis(const DensityMatrix& rho, const OrthonormalBasis& basis);

/// Sum of off-diagonal absolute values of the state in `basis`.
Real l1_coherence(const Matrix& rho, const OrthonormalBasis& basis);
Real l1_coherence(const DensityMatrix& rho, const OrthonormalBasis& basis);

/// Entropy of the dephased state minus entropy of the state, in bits.
/// Needs a genuine density matrix (spectrum in [0, 1]).
Real rel_entropy_coherence(const DensityMatrix& rho, const OrthonormalBasis& basis);

struct CoherenceReport {
  std::string basis_label;
  Real l1 = 0.0;
  Real relative_entropy = 0.0;
};

CoherenceReport coherence_report(const DensityMatrix& rho, const OrthonormalBasis& basis);

/// The three single-qubit reference bases, keyed by the Pauli whose
/// eigenvectors they are.
enum class QubitBasis { Z, X, Y };

/// Closed form for the coherence of a Bloch-vector state without building
/// the coefficient matrix: the off-diagonal magnitude doubles, giving
/// sqrt of the sum of the two transverse squared components.
Real qubit_closed_form(const BlochVector& v, QubitBasis which);

/// The three product bases obtained by self-tensoring the qubit bases.
enum class PairBasis { ZZ, XX, YY };

/// Closed form for the coherence of a Bell-diagonal state in a product
/// basis: (1/2)(|a - b| + |a + b|) for the two correlation components the
/// basis leaves off-diagonal (equivalently max(|a|, |b|)).
Real bell_closed_form(const CorrelationTriple& c, PairBasis which);

/// Sum of bell_closed_form over the three product bases.
Real bell_sum(const CorrelationTriple& c);

/// Shared immutable instances of the reference bases.
const OrthonormalBasis& qubit_basis(QubitBasis which);
const OrthonormalBasis& pair_basis(PairBasis which);

}  // namespace mubcoh
