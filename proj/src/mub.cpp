#include "mubcoh/mub.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "mubcoh/errors.hpp"
#include "mubcoh/linalg.hpp"

namespace mubcoh {

namespace {

Matrix unitarity_residual(const Matrix& kets) {
  return kets.adjoint() * kets - Matrix::Identity(kets.cols(), kets.cols());
}

}  // namespace

OrthonormalBasis make_basis(std::string label, Matrix kets, Real tol, bool renormalize) {
  if (kets.rows() != kets.cols() || kets.rows() < 1)
    throw InvalidBasis("basis needs exactly dim kets of dimension dim");
  if (!kets.allFinite()) throw InvalidBasis("basis has non-finite entries");
  if (renormalize) {
    for (Index j = 0; j < kets.cols(); ++j) {
      const Real n = kets.col(j).norm();
      if (!(n > 0.0)) throw InvalidBasis("cannot renormalize a zero ket");
      kets.col(j) /= n;
    }
  }
  const Real defect = unitarity_residual(kets).cwiseAbs().maxCoeff();
  if (!(defect <= tol))
    throw InvalidBasis("kets are not orthonormal: max residual " + detail::fmt_real(defect));
  return OrthonormalBasis{std::move(label), std::move(kets)};
}

MubSet pauli_mubs() {
  const Real s = 1.0 / std::sqrt(2.0);
  const Complex i(0, 1);

  Matrix z = Matrix::Identity(2, 2);

  Matrix x(2, 2);
  x.col(0) << s, s;
  x.col(1) << s, -s;

  Matrix y(2, 2);
  y.col(0) << Complex(s, 0), i * s;
  y.col(1) << Complex(s, 0), -i * s;

  MubSet set;
  set.dim = 2;
  set.bases.push_back(make_basis("z", std::move(z)));
  set.bases.push_back(make_basis("x", std::move(x)));
  set.bases.push_back(make_basis("y", std::move(y)));
  return set;
}

MubSet dim3_mubs() {
  const Real third_turn = 2.0 * std::numbers::pi / 3.0;
  const Complex w(std::cos(third_turn), std::sin(third_turn));
  const Complex w2 = w * w;
  const Real s = 1.0 / std::sqrt(3.0);

  Matrix computational = Matrix::Identity(3, 3);

  Matrix fourier(3, 3);
  fourier.col(0) << Complex(1, 0), Complex(1, 0), Complex(1, 0);
  fourier.col(1) << Complex(1, 0), w, w2;
  fourier.col(2) << Complex(1, 0), w2, w;
  fourier *= s;

  Matrix fourier_t1(3, 3);
  fourier_t1.col(0) << Complex(1, 0), Complex(1, 0), w2;
  fourier_t1.col(1) << Complex(1, 0), w2, Complex(1, 0);
  fourier_t1.col(2) << Complex(1, 0), w, w;
  fourier_t1 *= s;

  Matrix fourier_t2(3, 3);
  fourier_t2.col(0) << Complex(1, 0), Complex(1, 0), w;
  fourier_t2.col(1) << Complex(1, 0), w, Complex(1, 0);
  fourier_t2.col(2) << Complex(1, 0), w2, w2;
  fourier_t2 *= s;

  MubSet set;
  set.dim = 3;
  set.bases.push_back(make_basis("computational", std::move(computational)));
  set.bases.push_back(make_basis("fourier", std::move(fourier)));
  set.bases.push_back(make_basis("fourier-t1", std::move(fourier_t1)));
  set.bases.push_back(make_basis("fourier-t2", std::move(fourier_t2)));
  return set;
}

MubSet build_amub(const MubSet& source) {
  MubSet out;
  const Index d = source.dim;
  out.dim = d * d;
  for (const OrthonormalBasis& b : source.bases) {
    Matrix kets(d * d, d * d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        kets.col(i * d + j) = tensor_product(b.kets.col(i), b.kets.col(j));
    const std::string label =
        b.label.size() == 1 ? b.label + b.label : b.label + "*" + b.label;
    out.bases.push_back(make_basis(label, std::move(kets)));
  }
  return out;
}

OverlapReport check_unbiased(const OrthonormalBasis& b1, const OrthonormalBasis& b2, Real tol) {
  if (b1.dim() != b2.dim()) throw DimensionMismatch("bases live in different dimensions");
  const Index d = b1.dim();
  const Real target = 1.0 / static_cast<Real>(d);
  Real dev = 0.0;
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      const Real overlap_sq = std::norm(b1.kets.col(a).dot(b2.kets.col(b)));
      dev = std::max(dev, std::abs(overlap_sq - target));
    }
  return OverlapReport{dev <= tol, dev, target};
}

OverlapReport check_amub(const OrthonormalBasis& b1, const OrthonormalBasis& b2, Index d,
                         Real tol) {
  if (d < 1) throw DimensionMismatch("factor dimension must be positive");
  if (b1.dim() != d * d || b2.dim() != d * d)
    throw DimensionMismatch("bases do not live in dimension d*d");
  const Real target = 1.0 / static_cast<Real>(d);
  Real dev = 0.0;
  for (Index a = 0; a < d * d; ++a)
    for (Index b = 0; b < d * d; ++b) {
      const Real overlap = std::abs(b1.kets.col(a).dot(b2.kets.col(b)));
      dev = std::max(dev, std::abs(overlap - target));
    }
  return OverlapReport{dev <= tol, dev, target};
}

}  // namespace mubcoh
