#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "framelab/errors.hpp"

namespace framelab {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Single tolerance policy shared by every module.
struct Tolerance {
    double rank_rel = 1e-10;     // relative singular-value cutoff
    double residual_abs = 1e-8;  // residual acceptance threshold
    double zero_level = 1e-8;    // Phi zero-set threshold
};

struct SvdResult {
    CMatrix u;                  // orthonormal columns
    std::vector<double> sigma;  // descending, nonnegative
    CMatrix v;                  // orthonormal columns; M = u * diag(sigma) * v^*
};

// Full SVD (u is rows x rows, v is cols x cols). Throws Error(NumericFailure)
// if the backend does not converge or the input has non-finite entries.
SvdResult svd(const CMatrix& m);

// Count of sigma_i > rank_rel * sigma_max; 0 for an empty or all-zero spectrum.
int numeric_rank(const std::vector<double>& sigma, const Tolerance& tol);
int numeric_rank(const CMatrix& m, const Tolerance& tol);

// Moore-Penrose pseudo-inverse with singular values below the rank cutoff
// treated as zero.
CMatrix pinv(const CMatrix& m, const Tolerance& tol);

// Orthonormal basis of the numeric null space, one column per kernel
// direction; cols(m) - numeric_rank columns (possibly zero).
CMatrix orthonormal_null_basis(const CMatrix& m, const Tolerance& tol);

// Largest singular value.
double operator_norm(const CMatrix& m);

// Distance between the subspaces spanned by the (orthonormal) columns of a
// and b, measured as the spectral norm of the projector difference.
double projector_distance(const CMatrix& a, const CMatrix& b);

bool all_finite(const CMatrix& m);

}  // namespace framelab
