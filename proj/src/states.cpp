#include "mubcoh/states.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "mubcoh/errors.hpp"

namespace mubcoh {

namespace {

HermitianState classify(Matrix m, bool require_physical) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NoConvergence();
  const Real min_eig = solver.eigenvalues().minCoeff();
  const bool physical = min_eig >= -kStateTol;
  if (require_physical && !physical) throw NotPositive(min_eig);
  return HermitianState{std::move(m), physical, min_eig};
}

}  // namespace

DensityMatrix bloch_state(const BlochVector& v) {
  const Real nsq = v.norm_squared();
  if (nsq > 1.0 + 1e-12) throw BlochNormExceeded(nsq);
  Matrix m(2, 2);
  m(0, 0) = Complex((1.0 + v.z) / 2.0, 0.0);
  m(0, 1) = Complex(v.x / 2.0, -v.y / 2.0);
  m(1, 0) = Complex(v.x / 2.0, v.y / 2.0);
  m(1, 1) = Complex((1.0 - v.z) / 2.0, 0.0);
  return validate_density(m, kStateTol);
}

HermitianState x3_state(const XStateParams& params, bool require_physical) {
  const Real x = params.x;
  const Real y = params.y;
  const Real z = params.z;
  Matrix m = Matrix::Zero(3, 3);
  switch (params.variant) {
    case XStateVariant::Corners:
      m(0, 0) = x;
      m(1, 1) = 1.0 - x - y;
      m(2, 2) = y;
      m(0, 2) = z;
      m(2, 0) = z;
      break;
    case XStateVariant::Lower:
      m(0, 0) = 1.0 - x - y;
      m(1, 1) = x;
      m(2, 2) = y;
      m(1, 2) = z;
      m(2, 1) = z;
      break;
    case XStateVariant::Upper:
      m(0, 0) = x;
      m(1, 1) = y;
      m(2, 2) = 1.0 - x - y;
      m(0, 1) = z;
      m(1, 0) = z;
      break;
  }
  return classify(std::move(m), require_physical);
}

HermitianState bell_diagonal(const CorrelationTriple& c, bool require_physical) {
  for (const Real v : {c.c1, c.c2, c.c3})
    if (!(v >= -1.0 && v <= 1.0))
      throw ParamOutOfRange("correlation component " + detail::fmt_real(v) +
                            " outside [-1, 1]");
  const PauliSet& p = pauli_set();
  Matrix m = 0.25 * (tensor_product(p.identity_2, p.identity_2) +
                     c.c1 * tensor_product(p.sigma_x, p.sigma_x) +
                     c.c2 * tensor_product(p.sigma_y, p.sigma_y) +
                     c.c3 * tensor_product(p.sigma_z, p.sigma_z));
  return classify(std::move(m), require_physical);
}

bool is_physical_triple(const CorrelationTriple& c, Real tol) {
  return bell_diagonal(c).min_eigenvalue >= -tol;
}

DensityMatrix werner(Real p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParamOutOfRange("werner weight " + detail::fmt_real(p) + " outside [0, 1]");
  const Real outer = p / 3.0;
  const Real inner_diag = 0.5 - p / 3.0;
  const Real inner_off = 2.0 * p / 3.0 - 0.5;
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = outer;
  m(3, 3) = outer;
  m(1, 1) = inner_diag;
  m(2, 2) = inner_diag;
  m(1, 2) = inner_off;
  m(2, 1) = inner_off;
  return validate_density(m, kStateTol);
}

DensityMatrix isotropic(Real F) {
  if (!(F >= 0.0 && F <= 1.0))
    throw ParamOutOfRange("isotropic fidelity " + detail::fmt_real(F) + " outside [0, 1]");
  const Real outer = F / 3.0 + 1.0 / 6.0;
  const Real inner = 1.0 / 3.0 - F / 3.0;
  const Real corner = 2.0 * F / 3.0 - 1.0 / 6.0;
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = outer;
  m(3, 3) = outer;
  m(1, 1) = inner;
  m(2, 2) = inner;
  m(0, 3) = corner;
  m(3, 0) = corner;
  return validate_density(m, kStateTol);
}

DensityMatrix to_density(const HermitianState& s, Real tol) {
  return validate_density(s.matrix, tol);
}

}  // namespace mubcoh
