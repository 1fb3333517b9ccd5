#pragma once

#include <complex>
#include <random>

#include "framelab/hilbert.hpp"

namespace testutil {

inline framelab::CMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  framelab::CMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      m(i, j) = framelab::Complex(dist(gen), dist(gen));
    }
  }
  return m;
}

inline framelab::CVector random_vector(int dim, std::uint64_t seed) {
  return random_matrix(dim, 1, seed).col(0);
}

// Unitary matrix from the QR factorization of a random Gaussian matrix.
inline framelab::CMatrix random_unitary(int dim, std::uint64_t seed) {
  framelab::CMatrix g = random_matrix(dim, dim, seed);
  Eigen::HouseholderQR<framelab::CMatrix> qr(g);
  framelab::CMatrix q = qr.householderQ() * framelab::CMatrix::Identity(dim, dim);
  framelab::CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    framelab::Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace testutil
