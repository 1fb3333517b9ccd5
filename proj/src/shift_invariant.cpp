#include "framelab/shift_invariant.hpp"

#include <algorithm>
#include <cmath>

#include "framelab/gabor.hpp"
#include "framelab/operator_rep.hpp"

namespace framelab {

void SampledSpectrum::validate() const {
    if (grid_size < 2) throw Error(ErrorKind::Config, "spectrum grid needs >= 2 points");
    if (freq_extent <= 0.0) throw Error(ErrorKind::Config, "spectrum extent must be positive");
    if (static_cast<int>(values.size()) != grid_size)
        throw Error(ErrorKind::Config, "spectrum value count != grid size");
}

double SampledSpectrum::grid_point(int i) const {
    return -freq_extent + 2.0 * freq_extent * double(i) / double(grid_size - 1);
}

Complex SampledSpectrum::at_nearest(double xi) const {
    const double pos = (xi + freq_extent) * double(grid_size - 1) / (2.0 * freq_extent);
    const int i = std::clamp(static_cast<int>(std::lround(pos)), 0, grid_size - 1);
    return values[i];
}

SampledSpectrum sinc_spectrum(int grid_size, double freq_extent) {
    if (freq_extent < 0.5)
        throw Error(ErrorKind::Config, "sinc spectrum needs extent >= 1/2");
    SampledSpectrum s;
    s.grid_size = grid_size;
    s.freq_extent = freq_extent;
    s.values.resize(grid_size);
    // Half-open band [-1/2, 1/2): with both endpoints included, the
    // integer-shift sums of Phi would double-count the boundary points.
    for (int i = 0; i < grid_size; ++i) {
        const double xi = s.grid_point(i);
        s.values[i] = (xi >= -0.5 && xi < 0.5) ? 1.0 : 0.0;
    }
    s.validate();
    return s;
}

SampledSpectrum gauss_spectrum(int grid_size, double freq_extent, double sigma) {
    if (sigma <= 0.0) throw Error(ErrorKind::Config, "gauss spectrum needs sigma > 0");
    SampledSpectrum s;
    s.grid_size = grid_size;
    s.freq_extent = freq_extent;
    s.values.resize(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        const double xi = s.grid_point(i);
        s.values[i] = std::exp(-xi * xi / (2.0 * sigma * sigma));
    }
    s.validate();
    return s;
}

namespace {

double trimmed_min(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    return v[std::min(v.size() - 1, static_cast<size_t>(0.005 * double(v.size())))];
}

double trimmed_max(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const size_t drop = static_cast<size_t>(0.005 * double(v.size()));
    return v[v.size() - 1 - std::min(v.size() - 1, drop)];
}

}  // namespace

PhiProfile phi_profile(const SampledSpectrum& spec, double b, int gamma_points,
                       const Tolerance& tol) {
    spec.validate();
    if (b <= 0.0) throw Error(ErrorKind::Config, "phi profile needs b > 0");
    if (gamma_points < 1) throw Error(ErrorKind::Config, "phi profile needs a nonempty grid");

    // Extent coverage: mass hugging the boundary means the k-sum truncation
    // would silently drop terms. Compare the energy in the outer 1% of the
    // grid against the total energy.
    const double guard = 0.01 * 2.0 * spec.freq_extent;
    double boundary_energy = 0.0, total_energy = 0.0;
    for (int i = 0; i < spec.grid_size; ++i) {
        const double e = std::norm(spec.values[i]);
        total_energy += e;
        if (spec.freq_extent - std::abs(spec.grid_point(i)) < guard) boundary_energy += e;
    }
    if (total_energy > 0.0 && boundary_energy > 1e-9 * total_energy)
        throw Error(ErrorKind::Discretization,
                    "spectrum has mass within 1% of the extent boundary; enlarge F");

    PhiProfile p;
    p.gamma_grid.resize(gamma_points);
    p.phi_values.resize(gamma_points);
    const double f = spec.freq_extent;
    for (int i = 0; i < gamma_points; ++i) {
        const double gamma = double(i) / double(gamma_points);
        p.gamma_grid[i] = gamma;
        double acc = 0.0;
        // |(gamma + k)/b| <= F  <=>  -Fb - gamma <= k <= Fb - gamma
        const int k_lo = static_cast<int>(std::ceil(-f * b - gamma - 1e-12));
        const int k_hi = static_cast<int>(std::floor(f * b - gamma + 1e-12));
        for (int k = k_lo; k <= k_hi; ++k)
            acc += std::norm(spec.at_nearest((gamma + k) / b));
        p.phi_values[i] = acc;
    }

    std::vector<double> support;
    int zeros = 0;
    for (double v : p.phi_values) {
        if (v <= tol.zero_level) ++zeros;
        else support.push_back(v);
    }
    p.zero_fraction = double(zeros) / double(gamma_points);
    p.ess_inf_support = trimmed_min(support);
    p.ess_sup = trimmed_max(p.phi_values);
    return p;
}

const char* si_class_name(SiClass c) {
    switch (c) {
        case SiClass::RieszBasis: return "RIESZ_BASIS";
        case SiClass::FrameSequenceNotRiesz: return "FRAME_SEQUENCE_NOT_RIESZ";
        case SiClass::NotFrameSequence: return "NOT_FRAME_SEQUENCE";
    }
    return "NOT_FRAME_SEQUENCE";
}

SiClass classify_si(const PhiProfile& profile, const Tolerance& tol) {
    const size_t g = profile.phi_values.size();
    // Allow at most two grid points in the zero set before treating it as a
    // genuine (positive-measure) zero set rather than a boundary artifact.
    const double zero_measure_threshold = g ? 2.0 / double(g) : 0.0;
    // Support values this close to the zero level mean Phi accumulates at 0.
    const double inf_floor = 10.0 * tol.zero_level;

    if (profile.ess_inf_support <= inf_floor) return SiClass::NotFrameSequence;
    if (profile.zero_fraction <= zero_measure_threshold) return SiClass::RieszBasis;
    return SiClass::FrameSequenceNotRiesz;
}

SiFamily si_family(const SampledSpectrum& spec, double b, int count, int j_dim, bool cyclic) {
    spec.validate();
    if (count < 1 || j_dim < 1) throw Error(ErrorKind::Config, "si family: bad sizes");

    // Sampling interval 1/(2F); one b-shift spans 2Fb samples.
    const double step_real = 2.0 * spec.freq_extent * b;
    const int step = static_cast<int>(std::lround(step_real));
    if (step < 1 || std::abs(step_real - step) > 1e-9)
        throw Error(ErrorKind::Discretization,
                    "translation step " + std::to_string(step_real) +
                        " samples is not integral; choose F so that 2*F*b is a whole number");

    // phi = unit-norm inverse DFT of the spectrum sampled at the DFT bins.
    CVector phi = CVector::Zero(j_dim);
    for (int q = -j_dim / 2; q < (j_dim + 1) / 2; ++q) {
        const double xi = 2.0 * spec.freq_extent * double(q) / double(j_dim);
        const Complex v = spec.at_nearest(xi);
        if (v == Complex(0.0, 0.0)) continue;
        for (int t = 0; t < j_dim; ++t)
            phi(t) += v * std::polar(1.0, 2.0 * M_PI * double(q) * double(t) / double(j_dim));
    }
    const double nrm = phi.norm();
    if (nrm == 0.0) throw Error(ErrorKind::Config, "si family: spectrum is zero on the grid");
    phi /= nrm;

    SiFamily out;
    out.step_samples = step;
    out.b = b;
    out.cyclic = cyclic;
    out.family.index.kind = IndexConvention::Kind::IntWindow;
    out.family.index.offset = -(count / 2);
    out.family.vectors = CMatrix(j_dim, count);
    out.family.labels = std::vector<std::string>();
    for (int k = 0; k < count; ++k) {
        const int power = out.family.index.offset + k;
        const int shift = power * step;
        if (cyclic) {
            out.family.vectors.col(k) = translate(phi, shift);
        } else {
            CVector v = CVector::Zero(j_dim);
            for (int t = 0; t < j_dim; ++t) {
                const int src = t - shift;
                if (src >= 0 && src < j_dim) v(t) = phi(src);
            }
            out.family.vectors.col(k) = v;
        }
        out.family.labels->push_back("k=" + std::to_string(power));
    }
    return out;
}

TranslationRepresentationCheck translation_representation_check(const SiFamily& fam,
                                                                const Tolerance& tol) {
    fam.family.validate();
    TranslationRepresentationCheck out;
    const Eigen::Index k = fam.family.count();
    const Eigen::Index j_dim = fam.family.dim();
    auto step_once = [&](const CVector& v) {
        if (fam.cyclic) return translate(v, fam.step_samples);
        CVector out = CVector::Zero(j_dim);
        for (Eigen::Index t = 0; t < j_dim; ++t) {
            const Eigen::Index src = t - fam.step_samples;
            if (src >= 0 && src < j_dim) out(t) = v(src);
        }
        return out;
    };
    for (Eigen::Index i = 0; i + 1 < k; ++i) {
        const CVector stepped = step_once(fam.family.vectors.col(i));
        const double r = (stepped - fam.family.vectors.col(i + 1)).norm();
        if (r > out.max_step_residual) out.max_step_residual = r;
        if (r > tol.residual_abs && out.first_violation < 0)
            out.first_violation = static_cast<int>(i);
    }
    out.is_iterated = out.first_violation < 0;
    out.shift_residual = shift_invariance_residual(fam.family, tol, ShiftMode::Cyclic);
    return out;
}

}  // namespace framelab
