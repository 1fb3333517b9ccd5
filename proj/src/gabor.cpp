#include "framelab/gabor.hpp"

#include <cmath>

namespace framelab {

void FiniteGaborSystem::validate() const {
    if (l < 1) throw Error(ErrorKind::Config, "gabor: L must be positive");
    if (a < 1 || l % a != 0) throw Error(ErrorKind::Config, "gabor: a must divide L");
    if (b < 1 || l % b != 0) throw Error(ErrorKind::Config, "gabor: b must divide L");
    if (g.size() != l) throw Error(ErrorKind::Config, "gabor: window dim != L");
    if (g.norm() == 0.0) throw Error(ErrorKind::Config, "gabor: window is zero");
}

CVector translate(const CVector& v, int a) {
    const int l = static_cast<int>(v.size());
    CVector out(l);
    for (int t = 0; t < l; ++t) out(t) = v(((t - a) % l + l) % l);
    return out;
}

CVector modulate(const CVector& v, int b) {
    const int l = static_cast<int>(v.size());
    CVector out(l);
    for (int t = 0; t < l; ++t)
        out(t) = std::polar(1.0, 2.0 * M_PI * double(b) * double(t) / double(l)) * v(t);
    return out;
}

namespace {

// 0, 1, -1, 2, -2, ... folded into {0..n-1} mod n.
int zigzag_index(int i, int n) {
    const int z = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
    return ((z % n) + n) % n;
}

}  // namespace

FrameFamily gabor_family(const FiniteGaborSystem& sys, const GaborOrder& order) {
    sys.validate();
    const int nt = sys.l / sys.a;  // translations
    const int nm = sys.l / sys.b;  // modulations
    const int count = nt * nm;

    std::vector<std::pair<int, int>> lattice;  // (n, m) in enumeration order
    lattice.reserve(count);
    switch (order.kind) {
        case GaborOrder::Kind::Raster:
            for (int n = 0; n < nt; ++n)
                for (int m = 0; m < nm; ++m) lattice.emplace_back(n, m);
            break;
        case GaborOrder::Kind::Zigzag:
            for (int i = 0; i < nt; ++i)
                for (int j = 0; j < nm; ++j)
                    lattice.emplace_back(zigzag_index(i, nt), zigzag_index(j, nm));
            break;
        case GaborOrder::Kind::Custom: {
            if (static_cast<int>(order.permutation.size()) != count)
                throw Error(ErrorKind::Config, "gabor order permutation must cover the lattice");
            std::vector<bool> seen(count, false);
            for (int flat : order.permutation) {
                if (flat < 0 || flat >= count || seen[flat])
                    throw Error(ErrorKind::Config, "gabor order is not a permutation");
                seen[flat] = true;
                lattice.emplace_back(flat / nm, flat % nm);
            }
            break;
        }
    }

    FrameFamily fam;
    fam.vectors = CMatrix(sys.l, count);
    fam.labels = std::vector<std::string>();
    for (int k = 0; k < count; ++k) {
        const auto [n, m] = lattice[k];
        fam.vectors.col(k) = modulate(translate(sys.g, n * sys.a), m * sys.b);
        fam.labels->push_back("m=" + std::to_string(m) + ",n=" + std::to_string(n));
    }
    return fam;
}

DensityCheck density_check(const FiniteGaborSystem& sys) {
    sys.validate();
    DensityCheck out;
    out.redundancy = double(sys.element_count()) / double(sys.l);
    out.frame_possible = out.redundancy >= 1.0;
    out.basis_candidate = out.redundancy == 1.0;
    return out;
}

namespace {

struct ThirdsModel {
    int l = 0;
    int cell = 0;  // L/3 samples per translation cell
    CVector g;
};

ThirdsModel thirds_model(int l) {
    if (l < 3 || l % 3 != 0)
        throw Error(ErrorKind::Config, "thirds model needs L divisible by 3");
    ThirdsModel m;
    m.l = l;
    m.cell = l / 3;
    m.g = CVector::Zero(l);
    for (int t = 0; t < m.cell; ++t) m.g(t) = 1.0 / std::sqrt(double(m.cell));
    return m;
}

CVector thirds_vector(const ThirdsModel& m, int bin, int n) {
    return modulate(translate(m.g, n * m.cell), bin);
}

}  // namespace

FrameFamily example_70404u_lattice(int l) {
    const ThirdsModel m = thirds_model(l);
    FrameFamily fam;
    fam.vectors = CMatrix(l, 3 * l);
    fam.labels = std::vector<std::string>();
    int k = 0;
    for (int n = 0; n < 3; ++n)
        for (int bin = 0; bin < l; ++bin, ++k) {
            fam.vectors.col(k) = thirds_vector(m, bin, n);
            fam.labels->push_back("onb" + std::to_string(bin % 3));
        }
    return fam;
}

FrameFamily example_70404u_family(int l, int truncation) {
    const ThirdsModel m = thirds_model(l);
    if (truncation < 1) throw Error(ErrorKind::Pattern, "truncation must be positive");

    // Pools: mod-0 modulation bins form the distinguished ONB (L elements);
    // the mod-1 and mod-2 bases merge into the overcomplete rest (2L), block
    // by block with the two residues interleaved.
    std::vector<std::pair<int, int>> basis0, merged;  // (bin, n)
    for (int n = 0; n < 3; ++n)
        for (int q = 0; q < m.cell; ++q) basis0.emplace_back(3 * q, n);
    for (int n = 0; n < 3; ++n)
        for (int q = 0; q < m.cell; ++q) {
            merged.emplace_back(3 * q + 1, n);
            merged.emplace_back(3 * q + 2, n);
        }

    const int n_e = truncation - truncation / 2;    // even list positions
    const int n_eps = truncation / 2;               // odd list positions
    if (n_e > static_cast<int>(basis0.size()) || n_eps > static_cast<int>(merged.size()))
        throw Error(ErrorKind::Pattern,
                    "truncation " + std::to_string(truncation) + " exhausts a pool (L=" +
                        std::to_string(l) + ")");

    FrameFamily fam;
    fam.vectors = CMatrix(l, truncation);
    fam.labels = std::vector<std::string>();
    int i0 = 0, ix = 0;
    for (int pos = 0; pos < truncation; ++pos) {
        // 0-based even list positions are the 1-based odd ones: they carry
        // the distinguished ONB.
        const bool is_e = pos % 2 == 0;
        const auto [bin, n] = is_e ? basis0[i0++] : merged[ix++];
        fam.vectors.col(pos) = thirds_vector(m, bin, n);
        fam.labels->push_back(is_e ? "e" : "eps");
    }
    return fam;
}

}  // namespace framelab
