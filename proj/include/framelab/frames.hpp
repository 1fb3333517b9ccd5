#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framelab/hilbert.hpp"

namespace framelab {

// Whether the ordered list of vectors covers an N0-window {0..K-1} or a
// window of Z starting at `offset`.
struct IndexConvention {
    enum class Kind { Nat0, IntWindow };
    Kind kind = Kind::Nat0;
    int offset = 0;  // Nat0 implies offset == 0
};

// An ordered finite family of vectors in C^J, stored column-wise.
struct FrameFamily {
    CMatrix vectors;  // J x K, column k is f_k in list order
    IndexConvention index;
    std::optional<std::vector<std::string>> labels;  // per-vector tags

    Eigen::Index dim() const { return vectors.rows(); }
    Eigen::Index count() const { return vectors.cols(); }
    void validate() const;  // throws Error(Config) on broken invariants
};

enum class FrameClass {
    RieszBasisForSpan,
    OvercompleteFrameForSpan,
    NotFrame,
};

const char* frame_class_name(FrameClass c);

struct FrameReport {
    double lower_bound_a = 0.0;
    double upper_bound_b = 0.0;
    int rank = 0;
    int excess = 0;
    int kernel_dim = 0;
    FrameClass classification = FrameClass::NotFrame;
    bool is_frame_for_ambient = false;
};

// J x K matrix whose k-th column is f_k.
CMatrix synthesis_matrix(const FrameFamily& fam);

// Optimal frame-sequence bounds of the family for its span:
// B = sigma_max^2, A = (smallest singular value above the rank cutoff)^2.
// An all-zero family yields (0, 0).
std::pair<double, double> frame_bounds(const FrameFamily& fam, const Tolerance& tol);

FrameReport classify(const FrameFamily& fam, const Tolerance& tol);

// S = U U^*, Hermitian positive semidefinite.
CMatrix frame_operator(const FrameFamily& fam);

// {S^+ f_k}; throws Error(NotFrameSequence) when A = 0.
FrameFamily canonical_dual(const FrameFamily& fam, const Tolerance& tol);

int excess(const FrameFamily& fam, const Tolerance& tol);

// Orthonormal basis of the kernel of the synthesis matrix; column count
// equals the excess.
CMatrix kernel_basis(const FrameFamily& fam, const Tolerance& tol);

}  // namespace framelab
