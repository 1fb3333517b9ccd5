#pragma once

#include <string>
#include <vector>

#include "framelab/frames.hpp"

namespace framelab {

// Finite Gabor system on Z_L: translation step a samples, modulation step b
// frequency bins, window g of dim L.
struct FiniteGaborSystem {
    int l = 0;
    int a = 1;
    int b = 1;
    CVector g;
    void validate() const;  // a|L, b|L, g nonzero of dim L
    int element_count() const { return (l / a) * (l / b); }
};

// Cyclic index shift by a samples; unitary.
CVector translate(const CVector& v, int a);

// Pointwise phase e^{2 pi i b t / L}; unitary.
CVector modulate(const CVector& v, int b);

struct GaborOrder {
    enum class Kind { Raster, Zigzag, Custom };
    Kind kind = Kind::Raster;
    std::vector<int> permutation;  // for Custom, over flat raster indices
};

// Family {E_{mb} T_{na} g} over the lattice, enumerated per `order`
// (raster: n outer, m inner; zigzag folds each axis 0,1,-1,2,-2,... mod its
// length). Labels record "m=..,n=..".
FrameFamily gabor_family(const FiniteGaborSystem& sys, const GaborOrder& order = {});

struct DensityCheck {
    double redundancy = 0.0;  // element count / L, finite analogue of 1/(ab)
    bool frame_possible = false;
    bool basis_candidate = false;
};

DensityCheck density_check(const FiniteGaborSystem& sys);

// Finite model of the thirds-modulation Gabor frame: ambient C^L (L divisible
// by 3), window = normalized indicator of one of 3 translation cells of
// length L/3, all L modulation bins. The 3L lattice vectors split into three
// ONBs by modulation index mod 3. Ordering: odd positions take the mod-0
// basis, even positions interleave the other two; labels mark membership.
// Throws Error(Pattern) when the truncation exhausts either pool.
FrameFamily example_70404u_family(int l, int truncation);

// The full (untruncated) 3L-element lattice of the same model, raster order.
FrameFamily example_70404u_lattice(int l);

}  // namespace framelab
