#pragma once

#include <complex>

#include <Eigen/Core>

namespace mubcoh {

template <typename Scalar>
using ComplexMatrixT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVectorT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealVectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Real = double;
using Complex = std::complex<Real>;
using Matrix = ComplexMatrixT<Real>;
using Vector = ComplexVectorT<Real>;
using RealVector = RealVectorT<Real>;
using Index = Eigen::Index;

/// Tolerance for state validity checks (Hermiticity, unit trace, positivity).
inline constexpr Real kStateTol = 1e-9;

/// Tolerance for algebraic identities checked at double precision.
inline constexpr Real kIdentityTol = 1e-12;

}  // namespace mubcoh
