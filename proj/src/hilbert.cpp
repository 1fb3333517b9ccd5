#include "framelab/hilbert.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace framelab {

bool all_finite(const CMatrix& m) { return m.allFinite(); }

SvdResult svd(const CMatrix& m) {
    if (!all_finite(m)) throw Error(ErrorKind::NumericFailure, "svd: non-finite entries");
    Eigen::BDCSVD<CMatrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (dec.info() != Eigen::Success)
        throw Error(ErrorKind::NumericFailure, "svd: decomposition did not converge");
    SvdResult out;
    out.u = dec.matrixU();
    out.v = dec.matrixV();
    const auto& s = dec.singularValues();
    out.sigma.assign(s.data(), s.data() + s.size());
    return out;
}

int numeric_rank(const std::vector<double>& sigma, const Tolerance& tol) {
    if (sigma.empty()) return 0;
    const double cut = tol.rank_rel * sigma.front();
    if (sigma.front() == 0.0) return 0;
    int r = 0;
    for (double s : sigma)
        if (s > cut) ++r;
    return r;
}

int numeric_rank(const CMatrix& m, const Tolerance& tol) {
    if (m.size() == 0) return 0;
    Eigen::BDCSVD<CMatrix> dec(m);
    const auto& s = dec.singularValues();
    return numeric_rank(std::vector<double>(s.data(), s.data() + s.size()), tol);
}

CMatrix pinv(const CMatrix& m, const Tolerance& tol) {
    SvdResult d = svd(m);
    const int r = numeric_rank(d.sigma, tol);
    CMatrix out = CMatrix::Zero(m.cols(), m.rows());
    for (int i = 0; i < r; ++i)
        out += (1.0 / d.sigma[i]) * d.v.col(i) * d.u.col(i).adjoint();
    return out;
}

CMatrix orthonormal_null_basis(const CMatrix& m, const Tolerance& tol) {
    if (m.cols() == 0) return CMatrix(0, 0);
    SvdResult d = svd(m);
    const int r = numeric_rank(d.sigma, tol);
    return d.v.rightCols(m.cols() - r);
}

double operator_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<CMatrix> dec(m);
    return dec.singularValues()(0);
}

double projector_distance(const CMatrix& a, const CMatrix& b) {
    const Eigen::Index n = a.rows() ? a.rows() : b.rows();
    CMatrix pa = CMatrix::Zero(n, n), pb = CMatrix::Zero(n, n);
    if (a.cols()) pa = a * a.adjoint();
    if (b.cols()) pb = b * b.adjoint();
    return operator_norm(pa - pb);
}

}  // namespace framelab
