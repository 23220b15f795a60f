#include "mubcoh/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace mubcoh {

namespace {

void ensure_square(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) throw NotSquare();
}

void ensure_finite(const Matrix& m) {
  if (!m.allFinite()) throw InputError("matrix has non-finite entries");
}

void ensure_hermitian(const Matrix& m, Real tol) {
  const Real defect = hermiticity_defect(m);
  if (!(defect <= tol)) throw NotHermitian(defect);
}

}  // namespace

const PauliSet& pauli_set() {
  static const PauliSet p = [] {
    PauliSet s;
    s.sigma_x = Matrix(2, 2);
    s.sigma_x << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
    s.sigma_y = Matrix(2, 2);
    s.sigma_y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    s.sigma_z = Matrix(2, 2);
    s.sigma_z << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
    s.identity_2 = Matrix::Identity(2, 2);
    return s;
  }();
  return p;
}

HermitianSpectrum hermitian_eigenvalues(const Matrix& m) {
  ensure_square(m);
  ensure_finite(m);
  ensure_hermitian(m, kStateTol);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NoConvergence();
  return solver.eigenvalues().reverse();
}

HermitianEigensystem hermitian_eigensystem(const Matrix& m) {
  ensure_square(m);
  ensure_finite(m);
  ensure_hermitian(m, kStateTol);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw NoConvergence();
  HermitianEigensystem out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

DensityMatrix validate_density(const Matrix& m, Real tol) {
  ensure_square(m);
  ensure_finite(m);
  ensure_hermitian(m, tol);
  const Complex tr = m.trace();
  if (!(std::abs(tr - Complex(1, 0)) <= tol)) throw TraceMismatch(tr.real());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NoConvergence();
  const Real min_eig = solver.eigenvalues().minCoeff();
  if (!(min_eig >= -tol)) throw NotPositive(min_eig);
  return DensityMatrix(m);
}

Real von_neumann_entropy_bits(const RealVector& eigenvalues) {
  Real s = 0.0;
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    const Real lambda = eigenvalues(i);
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

}  // namespace mubcoh
