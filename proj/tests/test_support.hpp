#pragma once

// Helpers shared by the test binaries: deterministic random matrix
// generation and conversions into the oracle container types.

#include "mubcoh/linalg.hpp"
#include "mubcoh/rng.hpp"
#include "oracles.hpp"

namespace testsup {

using namespace mubcoh;

inline Matrix random_hermitian(SampleRng& rng, Index d, Real scale = 1.0) {
  Matrix m(d, d);
  for (Index i = 0; i < d; ++i) {
    m(i, i) = Complex(scale * rng.uniform(-1.0, 1.0), 0.0);
    for (Index j = i + 1; j < d; ++j) {
      m(i, j) = Complex(scale * rng.uniform(-1.0, 1.0), scale * rng.uniform(-1.0, 1.0));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Random density matrix: normalized Gram matrix of a random complex square
/// factor, positive semidefinite and unit trace by construction.
inline Matrix random_density(SampleRng& rng, Index d) {
  Matrix g(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      g(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  Matrix m = g * g.adjoint();
  return m / m.trace().real();
}

inline oracle::CplxMat to_oracle(const Matrix& m) {
  oracle::CplxMat out(static_cast<std::size_t>(m.rows()),
                      std::vector<oracle::Cplx>(static_cast<std::size_t>(m.cols())));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  return out;
}

/// kets[j][r] = component r of ket j (transposed relative to the column
/// layout of OrthonormalBasis).
inline oracle::CplxMat kets_to_oracle(const Matrix& kets) {
  oracle::CplxMat out(static_cast<std::size_t>(kets.cols()),
                      std::vector<oracle::Cplx>(static_cast<std::size_t>(kets.rows())));
  for (Index j = 0; j < kets.cols(); ++j)
    for (Index r = 0; r < kets.rows(); ++r)
      out[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)] = kets(r, j);
  return out;
}

}  // namespace testsup
