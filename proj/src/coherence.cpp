#include "mubcoh/coherence.hpp"

#include <cmath>

#include "mubcoh/errors.hpp"

namespace mubcoh {

CoefficientMatrix coefficients_in_basis(const Matrix& rho, const OrthonormalBasis& basis) {
  if (rho.rows() != rho.cols()) throw NotSquare();
  if (rho.rows() != basis.dim())
    throw DimensionMismatch("state and basis live in different dimensions");
  return CoefficientMatrix{basis.label, basis.kets.adjoint() * rho * basis.kets};
}

CoefficientMatrix coefficients_in_basis(const DensityMatrix& rho, const OrthonormalBasis& basis) {
  return coefficients_in_basis(rho.matrix(), basis);
}

Real l1_coherence(const Matrix& rho, const OrthonormalBasis& basis) {
  return offdiagonal_abs_sum(coefficients_in_basis(rho, basis).entries);
}

Real l1_coherence(const DensityMatrix& rho, const OrthonormalBasis& basis) {
  return l1_coherence(rho.matrix(), basis);
}

Real rel_entropy_coherence(const DensityMatrix& rho, const OrthonormalBasis& basis) {
  const CoefficientMatrix a = coefficients_in_basis(rho, basis);
  const RealVector diagonal = a.entries.diagonal().real();
  return von_neumann_entropy_bits(diagonal) -
         von_neumann_entropy_bits(hermitian_eigenvalues(rho.matrix()));
}

CoherenceReport coherence_report(const DensityMatrix& rho, const OrthonormalBasis& basis) {
  return CoherenceReport{basis.label, l1_coherence(rho, basis),
                         rel_entropy_coherence(rho, basis)};
}

Real qubit_closed_form(const BlochVector& v, QubitBasis which) {
  switch (which) {
    case QubitBasis::Z:
      return std::hypot(v.x, v.y);
    case QubitBasis::X:
      return std::hypot(v.z, v.y);
    case QubitBasis::Y:
      return std::hypot(v.z, v.x);
  }
  return 0.0;
}

namespace {

Real fold(Real a, Real b) { return 0.5 * (std::abs(a - b) + std::abs(a + b)); }

}  // namespace

Real bell_closed_form(const CorrelationTriple& c, PairBasis which) {
  switch (which) {
    case PairBasis::ZZ:
      return fold(c.c1, c.c2);
    case PairBasis::XX:
      return fold(c.c3, c.c2);
    case PairBasis::YY:
      return fold(c.c3, c.c1);
  }
  return 0.0;
}

Real bell_sum(const CorrelationTriple& c) {
  return bell_closed_form(c, PairBasis::ZZ) + bell_closed_form(c, PairBasis::XX) +
         bell_closed_form(c, PairBasis::YY);
}

const OrthonormalBasis& qubit_basis(QubitBasis which) {
  static const MubSet set = pauli_mubs();
  switch (which) {
    case QubitBasis::Z:
      return set.bases[0];
    case QubitBasis::X:
      return set.bases[1];
    case QubitBasis::Y:
      return set.bases[2];
  }
  return set.bases[0];
}

const OrthonormalBasis& pair_basis(PairBasis which) {
  static const MubSet set = build_amub(pauli_mubs());
  switch (which) {
    case PairBasis::ZZ:
      return set.bases[0];
    case PairBasis::XX:
      return set.bases[1];
    case PairBasis::YY:
      return set.bases[2];
  }
  return set.bases[0];
}

}  // namespace mubcoh
