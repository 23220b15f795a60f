#pragma once

#include <cmath>
#include <type_traits>

#include <Eigen/Core>

#include "mubcoh/errors.hpp"
#include "mubcoh/types.hpp"

namespace mubcoh {

/// Kronecker product with the row-major block convention:
/// out(i*rows(b) + k, j*cols(b) + l) = a(i, j) * b(k, l).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> tensor_product(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  static_assert(std::is_same_v<typename DerivedA::Scalar, typename DerivedB::Scalar>,
                "tensor_product operands must share a scalar type");
  using Out = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Out ae = a;
  const Out be = b;
  Out out(ae.rows() * be.rows(), ae.cols() * be.cols());
  for (Index i = 0; i < ae.rows(); ++i)
    for (Index j = 0; j < ae.cols(); ++j)
      out.block(i * be.rows(), j * be.cols(), be.rows(), be.cols()) = ae(i, j) * be;
  return out;
}

/// Largest entrywise |m - adjoint(m)|; zero iff m is exactly Hermitian.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real hermiticity_defect(
    const Eigen::MatrixBase<Derived>& m) {
  using Out = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Out me = m;
  return (me - me.adjoint().eval()).cwiseAbs().maxCoeff();
}

/// Largest entrywise |a - b|.
template <typename DerivedA, typename DerivedB>
typename Eigen::NumTraits<typename DerivedA::Scalar>::Real max_abs_diff(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a.derived() - b.derived()).cwiseAbs().maxCoeff();
}

/// Sum of |m(i, j)| over all i != j, accumulated in a fixed column-major order.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real offdiagonal_abs_sum(
    const Eigen::MatrixBase<Derived>& m) {
  using R = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  R sum = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (i != j) sum += std::abs(m.derived()(i, j));
  return sum;
}

/// The two-level Pauli matrices and the 2x2 identity.
struct PauliSet {
  Matrix sigma_x;
  Matrix sigma_y;
  Matrix sigma_z;
  Matrix identity_2;
};

const PauliSet& pauli_set();

/// Eigenvalues of a Hermitian matrix, sorted descending.
using HermitianSpectrum = RealVector;

/// Throws NotHermitian if the defect exceeds kStateTol, NoConvergence on solver failure.
HermitianSpectrum hermitian_eigenvalues(const Matrix& m);

/// Spectrum plus matching eigenvectors; vectors.col(i) belongs to values(i).
struct HermitianEigensystem {
  HermitianSpectrum values;
  Matrix vectors;
};

HermitianEigensystem hermitian_eigensystem(const Matrix& m);

/// A matrix that passed the density-matrix checks; immutable once built.
class DensityMatrix {
 public:
  Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }

 private:
  friend DensityMatrix validate_density(const Matrix& m, Real tol);
  explicit DensityMatrix(Matrix m) : mat_(std::move(m)) {}
  Matrix mat_;
};

/// Checks, in order: square shape, finite entries, Hermiticity within tol,
/// |trace - 1| <= tol, min eigenvalue >= -tol.
DensityMatrix validate_density(const Matrix& m, Real tol = kStateTol);

/// -sum(lambda * log2(lambda)) over positive entries; zero entries contribute 0.
/// Small negative entries (eigensolver rounding) are clamped to 0.
Real von_neumann_entropy_bits(const RealVector& eigenvalues);

}  // namespace mubcoh
