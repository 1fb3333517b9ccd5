#include "framelab/operator_rep.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <map>

namespace framelab {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::BoundedLikely: return "BOUNDED_LIKELY";
        case Verdict::UnboundedLikely: return "UNBOUNDED_LIKELY";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

CMatrix right_shift_matrix(int k, ShiftMode mode) {
    CMatrix s = CMatrix::Zero(k, k);
    for (int i = 1; i < k; ++i) s(i, i - 1) = 1.0;
    if (mode == ShiftMode::Cyclic && k > 0) s(0, k - 1) = 1.0;
    return s;
}

std::pair<CMatrix, double> construct_iteration_operator(const FrameFamily& fam,
                                                        const Tolerance& tol) {
    fam.validate();
    const Eigen::Index k = fam.count();
    if (k < 2) return {CMatrix::Zero(fam.dim(), fam.dim()), 0.0};

    const CMatrix head = fam.vectors.leftCols(k - 1);
    const CMatrix tail = fam.vectors.rightCols(k - 1);
    const double tail_norm = tail.norm();

    // Feasibility gate: interpolation conditions are solvable by some linear
    // map iff each tail column lies in the row space of the head resolved at
    // machine precision. Tested by projecting the tail onto the kept right
    // singular vectors of the head; inverting the tiny singular values (as the
    // rank-cutoff pinv below does) would amplify rounding by the condition
    // number and must not be used for the feasibility decision.
    const SvdResult dec = svd(head);
    const double top = dec.sigma.empty() ? 0.0 : dec.sigma.front();
    Eigen::Index machine_rank = 0;
    for (double s : dec.sigma)
        if (s > 1e-15 * top) ++machine_rank;
    const CMatrix vr = dec.v.leftCols(machine_rank);
    const double gate_err = (tail.adjoint() - vr * (vr.adjoint() * tail.adjoint())).norm();
    const double gate_residual = tail_norm > 0.0 ? gate_err / tail_norm : gate_err;
    if (gate_residual > tol.residual_abs)
        throw Error(ErrorKind::RepresentationImpossible,
                    "iteration operator interpolation residual " + std::to_string(gate_residual) +
                        " exceeds tolerance; family dependencies are not shift-consistent");

    const CMatrix t = tail * pinv(head, tol);
    const double err = (t * head - tail).norm();
    const double residual = tail_norm > 0.0 ? err / tail_norm : err;
    return {t, residual};
}

double shift_invariance_residual(const FrameFamily& fam, const Tolerance& tol,
                                 ShiftMode int_window_mode) {
    const CMatrix kb = kernel_basis(fam, tol);
    if (kb.cols() == 0) return 0.0;
    const ShiftMode mode =
        fam.index.kind == IndexConvention::Kind::Nat0 ? ShiftMode::ZeroFill : int_window_mode;
    const CMatrix shift = right_shift_matrix(static_cast<int>(fam.count()), mode);
    const CMatrix shifted = shift * kb;
    return operator_norm(shifted - kb * (kb.adjoint() * shifted));
}

RepresentationDiagnostics boundedness_profile(const FamilyGenerator& generator,
                                              const std::vector<int>& sizes,
                                              const Tolerance& tol,
                                              const VerdictThresholds& thresholds) {
    if (sizes.size() < 3) throw Error(ErrorKind::Config, "profile needs at least 3 sizes");
    if (!std::is_sorted(sizes.begin(), sizes.end()) ||
        std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end())
        throw Error(ErrorKind::Config, "profile sizes must be strictly increasing");

    RepresentationDiagnostics diag;
    for (int n : sizes) {
        FrameFamily fam = generator(n);
        try {
            auto [t, residual] = construct_iteration_operator(fam, tol);
            diag.norm_profile.emplace_back(n, operator_norm(t));
            diag.iteration_operator = std::move(t);
            diag.interp_residual = residual;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::RepresentationImpossible) throw;
            throw Error(ErrorKind::RepresentationImpossible,
                        "size " + std::to_string(n) + ": " + e.what());
        }
        if (n == sizes.back()) {
            diag.shift_residual = shift_invariance_residual(fam, tol);
            if (excess({fam.vectors.leftCols(fam.count() - 1), fam.index, std::nullopt}, tol) > 0)
                diag.warnings.push_back("head family is numerically rank-deficient; "
                                        "operator norm is conditioned on the resolved span");
        }
    }

    const auto& p = diag.norm_profile;
    const size_t m = p.size();
    auto step_threshold = [&](size_t i) {
        const double doublings = std::log2(double(p[i].first) / double(p[i - 1].first));
        return std::pow(thresholds.growth_factor, doublings);
    };
    const double r1 = p[m - 1].second / p[m - 2].second;
    const double r2 = p[m - 2].second / p[m - 3].second;
    const bool growing = r1 >= step_threshold(m - 1) && r2 >= step_threshold(m - 2);
    const bool plateau = std::abs(r1 - 1.0) <= thresholds.plateau_rel &&
                         std::abs(r2 - 1.0) <= thresholds.plateau_rel;
    diag.verdict = growing  ? Verdict::UnboundedLikely
                   : plateau ? Verdict::BoundedLikely
                             : Verdict::Inconclusive;
    return diag;
}

std::vector<std::pair<int, double>> tail_frame_check(const FrameFamily& fam, int n,
                                                     const std::vector<int>& ms,
                                                     const Tolerance& tol) {
    fam.validate();
    if (fam.index.kind != IndexConvention::Kind::Nat0)
        throw Error(ErrorKind::Config, "tail-frame check expects a Nat0-indexed truncation");
    const int k = static_cast<int>(fam.count());
    if (n < 0 || n >= k) throw Error(ErrorKind::Range, "N outside the truncation");

    // Coordinates of span(fam).
    SvdResult d = svd(fam.vectors);
    const int r = numeric_rank(d.sigma, tol);
    const CMatrix q = d.u.leftCols(r);

    std::vector<std::pair<int, double>> out;
    for (int m : ms) {
        if (m <= n) throw Error(ErrorKind::Range, "M must exceed N");
        if (m >= k) throw Error(ErrorKind::Range, "M beyond the truncation length");
        CMatrix sub(fam.dim(), (n + 1) + (k - m));
        sub.leftCols(n + 1) = fam.vectors.leftCols(n + 1);
        sub.rightCols(k - m) = fam.vectors.rightCols(k - m);
        const CMatrix b = q.adjoint() * sub;
        SvdResult ds = svd(b);
        const double s_r =
            (static_cast<int>(ds.sigma.size()) >= r && r > 0) ? ds.sigma[r - 1] : 0.0;
        out.emplace_back(m, s_r * s_r);
    }
    return out;
}

InterleavingClassification interleaving_classify(const FrameFamily& fam) {
    fam.validate();
    if (!fam.labels) throw Error(ErrorKind::Label, "interleaving classification needs labels");
    const auto& lab = *fam.labels;
    std::map<std::string, int> tags;
    for (const auto& l : lab) tags.emplace(l, static_cast<int>(tags.size()));
    if (tags.size() != 2)
        throw Error(ErrorKind::Label, "expected exactly two ONB tags, found " +
                                          std::to_string(tags.size()));
    const std::string& e_tag = lab.front();  // convention: the first vector is e_1

    InterleavingClassification cls;
    for (size_t k = 0; k + 1 < lab.size(); ++k) {
        const bool a = lab[k] == e_tag, b = lab[k + 1] == e_tag;
        if (a && !b) cls.i1.insert(static_cast<int>(k));
        else if (a && b) cls.i2.insert(static_cast<int>(k));
        else if (!a && b) cls.i3.insert(static_cast<int>(k));
        else cls.i4.insert(static_cast<int>(k));
    }
    cls.predicted_unbounded = cls.i2.empty() || cls.i4.empty();
    return cls;
}

CMatrix aldroubi_operator(int j_dim) {
    CMatrix t = CMatrix::Zero(j_dim, j_dim);
    for (int j = 1; j <= j_dim; ++j) t(j - 1, j - 1) = 1.0 - std::pow(2.0, -j);
    return t;
}

FrameFamily aldroubi_family(int j_dim, int k_count) {
    if (j_dim < 1 || k_count < 1) throw Error(ErrorKind::Config, "aldroubi: J, K >= 1");
    CVector f(j_dim);
    CVector lam(j_dim);
    for (int j = 1; j <= j_dim; ++j) {
        const double a = 1.0 - std::pow(2.0, -j);
        lam(j - 1) = a;
        f(j - 1) = std::sqrt(1.0 - a * a);
    }
    FrameFamily fam;
    fam.vectors = CMatrix(j_dim, k_count);
    fam.labels = std::vector<std::string>();
    for (int k = 0; k < k_count; ++k) {
        fam.vectors.col(k) = f;
        fam.labels->push_back("k=" + std::to_string(k));
        f = lam.cwiseProduct(f);
    }
    return fam;
}

FrameFamily interleave_onbs(const FrameFamily& e, const FrameFamily& eps,
                            const InterleavePattern& pattern) {
    e.validate();
    eps.validate();
    if (e.dim() != eps.dim())
        throw Error(ErrorKind::Config, "interleave: families live in different spaces");

    const int total = pattern.truncation.value_or(static_cast<int>(e.count() + eps.count()));
    std::vector<int> picks;
    picks.reserve(total);
    switch (pattern.kind) {
        case InterleavePattern::Kind::Alternate:
            for (int i = 0; i < total; ++i) picks.push_back(i % 2);
            break;
        case InterleavePattern::Kind::Block:
            if (pattern.block < 1) throw Error(ErrorKind::Pattern, "block length must be >= 1");
            for (int i = 0; i < total; ++i) picks.push_back((i / pattern.block) % 2);
            break;
        case InterleavePattern::Kind::Custom:
            if (static_cast<int>(pattern.sources.size()) < total)
                throw Error(ErrorKind::Pattern, "custom pattern shorter than requested length");
            picks.assign(pattern.sources.begin(), pattern.sources.begin() + total);
            break;
    }

    FrameFamily out;
    out.vectors = CMatrix(e.dim(), total);
    out.labels = std::vector<std::string>();
    Eigen::Index ie = 0, ix = 0;
    auto label_of = [](const FrameFamily& f, Eigen::Index i, const char* fallback) {
        return f.labels ? (*f.labels)[i] : std::string(fallback);
    };
    for (int pos = 0; pos < total; ++pos) {
        const int src = picks[pos];
        if (src != 0 && src != 1) throw Error(ErrorKind::Pattern, "pattern sources must be 0 or 1");
        const FrameFamily& f = src == 0 ? e : eps;
        Eigen::Index& i = src == 0 ? ie : ix;
        if (i >= f.count())
            throw Error(ErrorKind::Pattern, "pattern exhausts source " + std::to_string(src) +
                                                " at position " + std::to_string(pos));
        out.vectors.col(pos) = f.vectors.col(i);
        out.labels->push_back(label_of(f, i, src == 0 ? "e" : "eps"));
        ++i;
    }
    return out;
}

namespace {

// SplitMix64; stable across platforms, unlike std::normal_distribution.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
    double gauss() {
        double u = 0.0;
        while (u == 0.0) u = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * uniform());
    }
    Complex cgauss() { return {gauss(), gauss()}; }
};

}  // namespace

FrameFamily random_onb(int j_dim, std::uint64_t seed, const std::string& label) {
    Rng rng(seed);
    CMatrix g(j_dim, j_dim);
    for (int c = 0; c < j_dim; ++c)
        for (int r = 0; r < j_dim; ++r) g(r, c) = rng.cgauss();
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < j_dim; ++c) {
        const Complex d = r(c, c);
        if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
    }
    FrameFamily fam;
    fam.vectors = std::move(q);
    fam.labels = std::vector<std::string>(j_dim, label);
    return fam;
}

FrameFamily alternating_two_onb_family(int ambient, int size, std::uint64_t seed) {
    if (size > 2 * ambient)
        throw Error(ErrorKind::Pattern, "alternating family exceeds both ONB pools");
    FrameFamily e;
    e.vectors = CMatrix::Identity(ambient, ambient);
    e.labels = std::vector<std::string>(ambient, "e");
    FrameFamily eps = random_onb(ambient, seed, "eps");
    InterleavePattern pat;
    pat.kind = InterleavePattern::Kind::Alternate;
    pat.truncation = size;
    return interleave_onbs(e, eps, pat);
}

FrameFamily circulant_orbit_family(int ambient, int size, int step, std::uint64_t seed) {
    if (ambient < 1 || size < 1) throw Error(ErrorKind::Config, "circulant orbit: bad sizes");
    Rng rng(seed);
    CVector v(ambient);
    for (int i = 0; i < ambient; ++i) v(i) = rng.cgauss();
    v.normalize();

    FrameFamily fam;
    fam.index.kind = IndexConvention::Kind::IntWindow;
    fam.index.offset = -(size / 2);
    fam.vectors = CMatrix(ambient, size);
    fam.labels = std::vector<std::string>();
    for (int k = 0; k < size; ++k) {
        const int power = fam.index.offset + k;
        CVector fk(ambient);
        for (int i = 0; i < ambient; ++i) {
            const int src = ((i - power * step) % ambient + ambient) % ambient;
            fk(i) = v(src);
        }
        fam.vectors.col(k) = fk;
        fam.labels->push_back("k=" + std::to_string(power));
    }
    return fam;
}

}  // namespace framelab
