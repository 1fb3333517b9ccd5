#pragma once

#include <vector>

#include "framelab/frames.hpp"

namespace framelab {

// Uniformly sampled generator spectrum on [-F, F], endpoints included.
struct SampledSpectrum {
    int grid_size = 0;     // G >= 2
    double freq_extent = 0.0;  // F > 0
    std::vector<Complex> values;

    void validate() const;
    double grid_point(int i) const;     // xi_i = -F + 2F i/(G-1)
    Complex at_nearest(double xi) const;  // nearest-grid-point lookup
};

// chi_[-1/2,1/2) sampled on the grid (half-open so periodized sums of the
// indicator stay exactly 1 at the band edges).
SampledSpectrum sinc_spectrum(int grid_size, double freq_extent);

// exp(-xi^2 / (2 sigma^2)) sampled on the grid.
SampledSpectrum gauss_spectrum(int grid_size, double freq_extent, double sigma);

struct PhiProfile {
    std::vector<double> gamma_grid;   // points in [0, 1)
    std::vector<double> phi_values;   // nonnegative
    double ess_inf_support = 0.0;     // trimmed inf over {Phi > zero_level}
    double ess_sup = 0.0;             // trimmed sup
    double zero_fraction = 0.0;       // fraction of points with Phi <= zero_level
};

// Phi(gamma) = sum_k |phi_hat((gamma+k)/b)|^2, the k-sum truncated at the
// sampled extent. Errors if b <= 0 or if the spectrum carries mass within 1%
// of the grid boundary (silent truncation would corrupt the bounds).
PhiProfile phi_profile(const SampledSpectrum& spec, double b, int gamma_points,
                       const Tolerance& tol);

enum class SiClass { RieszBasis, FrameSequenceNotRiesz, NotFrameSequence };
const char* si_class_name(SiClass c);

SiClass classify_si(const PhiProfile& profile, const Tolerance& tol);

// A shift-invariant family realized in the cyclic time-domain model.
struct SiFamily {
    FrameFamily family;
    int step_samples = 0;  // translation step of one b-shift
    double b = 0.0;
    bool cyclic = true;
};

// K translates {T_kb phi} on C^J (Z-window indexing), with phi the
// unit-normalized inverse DFT of the sampled spectrum at sampling interval
// 1/(2F). The b-step must land on whole samples (step = 2 F b); otherwise a
// discretization error suggests compatible parameters. Cyclic translation by
// default; zero-padded translation behind the flag.
SiFamily si_family(const SampledSpectrum& spec, double b, int count, int j_dim,
                   bool cyclic = true);

struct TranslationRepresentationCheck {
    bool is_iterated = false;
    double max_step_residual = 0.0;
    double shift_residual = 0.0;
    int first_violation = -1;  // family position of the first broken step, or -1
};

// Verifies f_{k+1} = T_b f_k across consecutive pairs and that the kernel is
// stable under the cyclic Z-shift.
TranslationRepresentationCheck translation_representation_check(const SiFamily& fam,
                                                                const Tolerance& tol);

}  // namespace framelab
