#include "framelab/frames.hpp"

namespace framelab {

void FrameFamily::validate() const {
    if (vectors.cols() < 1) throw Error(ErrorKind::Config, "family needs at least one vector");
    if (!all_finite(vectors)) throw Error(ErrorKind::Config, "family has non-finite entries");
    if (index.kind == IndexConvention::Kind::Nat0 && index.offset != 0)
        throw Error(ErrorKind::Config, "Nat0 indexing requires offset 0");
    if (labels && static_cast<Eigen::Index>(labels->size()) != vectors.cols())
        throw Error(ErrorKind::Config, "label count does not match vector count");
}

const char* frame_class_name(FrameClass c) {
    switch (c) {
        case FrameClass::RieszBasisForSpan: return "RIESZ_BASIS_FOR_SPAN";
        case FrameClass::OvercompleteFrameForSpan: return "OVERCOMPLETE_FRAME_FOR_SPAN";
        case FrameClass::NotFrame: return "NOT_FRAME";
    }
    return "NOT_FRAME";
}

CMatrix synthesis_matrix(const FrameFamily& fam) {
    fam.validate();
    return fam.vectors;
}

std::pair<double, double> frame_bounds(const FrameFamily& fam, const Tolerance& tol) {
    SvdResult d = svd(synthesis_matrix(fam));
    const int r = numeric_rank(d.sigma, tol);
    if (r == 0) return {0.0, 0.0};
    return {d.sigma[r - 1] * d.sigma[r - 1], d.sigma[0] * d.sigma[0]};
}

FrameReport classify(const FrameFamily& fam, const Tolerance& tol) {
    SvdResult d = svd(synthesis_matrix(fam));
    const int r = numeric_rank(d.sigma, tol);
    FrameReport rep;
    rep.rank = r;
    rep.excess = static_cast<int>(fam.count()) - r;
    rep.kernel_dim = rep.excess;
    if (r > 0) {
        rep.lower_bound_a = d.sigma[r - 1] * d.sigma[r - 1];
        rep.upper_bound_b = d.sigma[0] * d.sigma[0];
    }
    if (r == 0)
        rep.classification = FrameClass::NotFrame;
    else if (rep.excess == 0)
        rep.classification = FrameClass::RieszBasisForSpan;
    else
        rep.classification = FrameClass::OvercompleteFrameForSpan;
    rep.is_frame_for_ambient = (r == fam.dim() && rep.lower_bound_a > 0.0);
    return rep;
}

CMatrix frame_operator(const FrameFamily& fam) {
    const CMatrix u = synthesis_matrix(fam);
    return u * u.adjoint();
}

FrameFamily canonical_dual(const FrameFamily& fam, const Tolerance& tol) {
    auto [a, b] = frame_bounds(fam, tol);
    if (a <= 0.0)
        throw Error(ErrorKind::NotFrameSequence, "canonical dual needs A > 0 on the span");
    const CMatrix s_pinv = pinv(frame_operator(fam), tol);
    FrameFamily dual = fam;
    dual.vectors = s_pinv * fam.vectors;
    return dual;
}

int excess(const FrameFamily& fam, const Tolerance& tol) {
    return static_cast<int>(fam.count()) - numeric_rank(synthesis_matrix(fam), tol);
}

CMatrix kernel_basis(const FrameFamily& fam, const Tolerance& tol) {
    return orthonormal_null_basis(synthesis_matrix(fam), tol);
}

}  // namespace framelab
