#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "framelab/frames.hpp"

namespace framelab {

enum class Verdict { BoundedLikely, UnboundedLikely, Inconclusive };
const char* verdict_name(Verdict v);

// Thresholds for the finite-truncation boundedness heuristic. growth_factor
// is per size doubling and rescaled for other size ratios.
struct VerdictThresholds {
    double growth_factor = 1.5;
    double plateau_rel = 0.05;
};

struct RepresentationDiagnostics {
    CMatrix iteration_operator;  // J x J, zero on the complement of the head span
    double interp_residual = 0.0;
    double shift_residual = 0.0;
    std::vector<std::pair<int, double>> norm_profile;  // (truncation size, ||T_N||)
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> warnings;
};

struct InterleavingClassification {
    std::set<int> i1, i2, i3, i4;  // successor-pair index sets, pairwise disjoint
    bool predicted_unbounded = false;
};

enum class ShiftMode { ZeroFill, Cyclic };

// Coefficient-space right shift {c_k} -> {c_{k-1}} on a K-window.
CMatrix right_shift_matrix(int k, ShiftMode mode);

// Minimal-Frobenius-norm T with T f_k = f_{k+1}, realized as
// F_tail * pinv(F_head); acts as zero on the orthogonal complement of the
// head span. Throws Error(RepresentationImpossible) when no linear map can
// satisfy the interpolation conditions: the tail, projected on the
// machine-precision row space of the head, must match within residual_abs.
// The returned residual is measured for the rank-cutoff operator and can be
// larger than that gate for ill-conditioned families.
std::pair<CMatrix, double> construct_iteration_operator(const FrameFamily& fam,
                                                        const Tolerance& tol);

// ||(Id - P) * Shift * Kb||_2 with Kb the kernel basis and P the projector
// onto its span; 0 when the kernel is trivial. Nat0 families always use the
// zero-fill shift.
double shift_invariance_residual(const FrameFamily& fam, const Tolerance& tol,
                                 ShiftMode int_window_mode = ShiftMode::ZeroFill);

using FamilyGenerator = std::function<FrameFamily(int size)>;

RepresentationDiagnostics boundedness_profile(const FamilyGenerator& generator,
                                              const std::vector<int>& sizes,
                                              const Tolerance& tol,
                                              const VerdictThresholds& thresholds = {});

// For each M, the lower bound of {f_0..f_N} u {f_M..f_last} measured as a
// frame for span(fam). The value is reported raw (no rank cutoff) so a broken
// span shows up as ~0.
std::vector<std::pair<int, double>> tail_frame_check(const FrameFamily& fam, int n,
                                                     const std::vector<int>& ms,
                                                     const Tolerance& tol);

// Successor-pair classification of a two-ONB ordering; requires exactly two
// distinct labels.
InterleavingClassification interleaving_classify(const FrameFamily& fam);

// f_k = T^k g with T = diag(1 - 2^-j), g_j = sqrt(1 - (1 - 2^-j)^2),
// truncated to C^J; labels record k.
FrameFamily aldroubi_family(int j_dim, int k_count);

// The diagonal generator used by aldroubi_family.
CMatrix aldroubi_operator(int j_dim);

struct InterleavePattern {
    enum class Kind { Alternate, Block, Custom };
    Kind kind = Kind::Alternate;
    int block = 2;                   // for Block
    std::vector<int> sources;        // for Custom: 0 = first family, 1 = second
    std::optional<int> truncation;   // stop after this many elements
};

// Merge two ONBs of the same space following the pattern; labels preserved.
// Throws Error(Pattern) if the pattern exhausts one source early.
FrameFamily interleave_onbs(const FrameFamily& e, const FrameFamily& eps,
                            const InterleavePattern& pattern);

// Deterministic Haar-like random ONB (own generator, stable across platforms).
FrameFamily random_onb(int j_dim, std::uint64_t seed, const std::string& label);

// {e_1, x_1, e_2, x_2, ...}: `size` vectors alternating the standard basis of
// C^ambient with a seeded random ONB. The truncation ladder used by the
// unboundedness experiments.
FrameFamily alternating_two_onb_family(int ambient, int size, std::uint64_t seed);

// Z-window family {C^k v} for a unitary circulant C (cyclic shift by `step`)
// applied to a seeded unit vector.
FrameFamily circulant_orbit_family(int ambient, int size, int step, std::uint64_t seed);

}  // namespace framelab
