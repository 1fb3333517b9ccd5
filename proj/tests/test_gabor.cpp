#include <doctest.h>

#include "framelab/gabor.hpp"
#include "framelab/operator_rep.hpp"
#include "util.hpp"

using namespace framelab;

namespace {

CVector delta(int l) {
  CVector v = CVector::Zero(l);
  v(0) = 1.0;
  return v;
}

FiniteGaborSystem make_sys(int l, int a, int b, CVector g) {
  FiniteGaborSystem sys;
  sys.l = l;
  sys.a = a;
  sys.b = b;
  sys.g = std::move(g);
  return sys;
}

CVector gauss_window(int l) {
  CVector g(l);
  double width = l / 8.0;
  for (int t = 0; t < l; ++t) {
    double d = std::min<double>(t, l - t);
    g(t) = std::exp(-d * d / (2.0 * width * width));
  }
  return g.normalized();
}

}  // namespace

TEST_CASE("translate and modulate are unitary and act as expected") {
  CVector v = testutil::random_vector(8, 4);
  CHECK(translate(v, 3).norm() == doctest::Approx(v.norm()).epsilon(1e-14));
  CHECK(modulate(v, 2).norm() == doctest::Approx(v.norm()).epsilon(1e-14));

  CVector d = delta(8);
  CVector td = translate(d, 3);
  CHECK(std::abs(td(3) - Complex(1.0)) <= 1e-15);
  CHECK(td.norm() == doctest::Approx(1.0).epsilon(1e-15));

  // Modulating a delta at 0 leaves it unchanged (phase e^0 = 1).
  CHECK((modulate(d, 5) - d).norm() <= 1e-15);

  // Full-period shifts are the identity.
  CHECK((translate(v, 8) - v).norm() <= 1e-14);
}

TEST_CASE("translate and modulate satisfy the commutation phase") {
  const int l = 12;
  CVector v = testutil::random_vector(l, 6);
  for (int a : {1, 3}) {
    for (int b : {1, 4}) {
      CVector lhs = modulate(translate(v, a), b);
      Complex phase = std::exp(Complex(0.0, 2.0 * M_PI * double(a) * double(b) / double(l)));
      CVector rhs = phase * translate(modulate(v, b), a);
      CHECK((lhs - rhs).norm() <= 1e-13);
    }
  }
}

TEST_CASE("gabor_family trivial lattices") {
  // a = b = L: single element, the window itself.
  FrameFamily single = gabor_family(make_sys(4, 4, 4, delta(4)));
  REQUIRE(single.count() == 1);
  CHECK((single.vectors.col(0) - delta(4)).norm() <= 1e-15);

  // L = 2, a = b = 1: all four E_m T_n delta, raster order (n outer, m inner).
  FrameFamily four = gabor_family(make_sys(2, 1, 1, delta(2)));
  REQUIRE(four.count() == 4);
  REQUIRE(four.labels.has_value());
  for (int idx = 0; idx < 4; ++idx) {
    int n = idx / 2;
    int m = idx % 2;
    CVector expect = modulate(translate(delta(2), n), m);
    CHECK((four.vectors.col(idx) - expect).norm() <= 1e-14);
  }
  CHECK((*four.labels)[0] == "m=0,n=0");
  CHECK((*four.labels)[1] == "m=1,n=0");
  CHECK((*four.labels)[2] == "m=0,n=1");
}

TEST_CASE("zigzag order folds each axis") {
  GaborOrder order;
  order.kind = GaborOrder::Kind::Zigzag;
  FrameFamily fam = gabor_family(make_sys(3, 1, 1, gauss_window(3)), order);
  REQUIRE(fam.labels.has_value());
  // Zigzag over 3 values is 0, 1, 2 (i.e. 0, 1, -1 mod 3); m is the inner axis.
  CHECK((*fam.labels)[0] == "m=0,n=0");
  CHECK((*fam.labels)[1] == "m=1,n=0");
  CHECK((*fam.labels)[2] == "m=2,n=0");
  CHECK((*fam.labels)[3] == "m=0,n=1");
}

TEST_CASE("custom order must be a permutation") {
  GaborOrder bad;
  bad.kind = GaborOrder::Kind::Custom;
  bad.permutation = {0, 0, 1, 2};
  CHECK_THROWS_AS(gabor_family(make_sys(2, 1, 1, delta(2)), bad), Error);
}

TEST_CASE("full lattice is a tight frame with bound L ||g||^2") {
  const int l = 6;
  CVector g = testutil::random_vector(l, 10).normalized();
  FrameFamily fam = gabor_family(make_sys(l, 1, 1, g));
  auto [a, b] = frame_bounds(fam, Tolerance{});
  CHECK(a == doctest::Approx(double(l)).epsilon(1e-10));
  CHECK(b == doctest::Approx(double(l)).epsilon(1e-10));
}

TEST_CASE("all gabor family elements share the window norm") {
  FrameFamily fam = gabor_family(make_sys(8, 2, 4, gauss_window(8)));
  for (int k = 0; k < fam.count(); ++k)
    CHECK(fam.vectors.col(k).norm() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("density check captures the redundancy law") {
  DensityCheck basis = density_check(make_sys(12, 3, 4, gauss_window(12)));
  CHECK(basis.redundancy == doctest::Approx(1.0));
  CHECK(basis.frame_possible);
  CHECK(basis.basis_candidate);

  DensityCheck over = density_check(make_sys(12, 2, 3, gauss_window(12)));
  CHECK(over.redundancy == doctest::Approx(2.0));
  CHECK(over.frame_possible);
  CHECK_FALSE(over.basis_candidate);

  DensityCheck under = density_check(make_sys(12, 4, 4, gauss_window(12)));
  CHECK(under.redundancy == doctest::Approx(0.75));
  CHECK_FALSE(under.frame_possible);
  // An undersampled lattice cannot span C^L.
  FrameFamily fam = gabor_family(make_sys(12, 4, 4, gauss_window(12)));
  CHECK(classify(fam, Tolerance{}).rank < 12);
}

TEST_CASE("redundancy-2 lattice with a generic window has excess L") {
  FrameFamily fam = gabor_family(make_sys(12, 2, 3, gauss_window(12)));
  FrameReport rep = classify(fam, Tolerance{});
  CHECK(rep.rank == 12);
  CHECK(rep.excess == 12);
}

TEST_CASE("the thirds-model lattice splits into three ONBs by modulation class") {
  const int l = 6;
  FrameFamily lattice = example_70404u_lattice(l);
  REQUIRE(lattice.count() == 3 * l);
  REQUIRE(lattice.labels.has_value());

  CMatrix part[3];
  int counts[3] = {0, 0, 0};
  for (int c = 0; c < 3; ++c) part[c] = CMatrix::Zero(l, l);
  for (int k = 0; k < lattice.count(); ++k) {
    const std::string& lab = (*lattice.labels)[k];
    int c = lab.back() - '0';
    REQUIRE(c >= 0);
    REQUIRE(c < 3);
    REQUIRE(counts[c] < l);
    part[c].col(counts[c]++) = lattice.vectors.col(k);
  }
  for (int c = 0; c < 3; ++c) {
    REQUIRE(counts[c] == l);
    CHECK((part[c].adjoint() * part[c] - CMatrix::Identity(l, l)).norm() <= 1e-12);
  }

  FrameReport rep = classify(lattice, Tolerance{});
  CHECK(rep.classification == FrameClass::OvercompleteFrameForSpan);
  CHECK(rep.excess == 2 * l);
  auto [a, b] = frame_bounds(lattice, Tolerance{});
  CHECK(a == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(b == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("the interleaved thirds family alternates the mod-0 basis with the rest") {
  const int l = 6;
  FrameFamily fam = example_70404u_family(l, 2 * l);
  REQUIRE(fam.count() == 2 * l);
  REQUIRE(fam.labels.has_value());
  for (int k = 0; k < fam.count(); ++k)
    CHECK((*fam.labels)[k] == (k % 2 == 0 ? "e" : "eps"));

  // Odd positions (0-based even indices) enumerate the mod-0 ONB.
  CMatrix odd(l, l);
  for (int k = 0; k < l; ++k) odd.col(k) = fam.vectors.col(2 * k);
  CHECK((odd.adjoint() * odd - CMatrix::Identity(l, l)).norm() <= 1e-12);
}

TEST_CASE("interleaved thirds family has kernel vectors on even positions only") {
  const int l = 6;
  FrameFamily fam = example_70404u_family(l, 2 * l);
  Tolerance tol;
  // The 1-based even (0-based odd) positions hold the overcomplete pool; its
  // internal dependencies give kernel vectors of the whole family that are
  // supported on those positions only.
  CMatrix eps(l, l);
  for (int k = 0; k < l; ++k) eps.col(k) = fam.vectors.col(2 * k + 1);
  CMatrix null_eps = orthonormal_null_basis(eps, tol);
  REQUIRE(null_eps.cols() > 0);
  for (int c = 0; c < null_eps.cols(); ++c) {
    CVector full = CVector::Zero(2 * l);
    for (int k = 0; k < l; ++k) full(2 * k + 1) = null_eps(k, c);
    CHECK((synthesis_matrix(fam) * full).norm() <= 1e-10);
  }
}

TEST_CASE("interleaved thirds family kernel is not shift invariant") {
  for (int l : {24, 48, 96}) {
    FrameFamily fam = example_70404u_family(l, 2 * l);
    double res = shift_invariance_residual(fam, Tolerance{});
    CHECK(res >= 0.5);
  }
}

TEST_CASE("thirds family truncation limits are enforced") {
  CHECK_THROWS_AS(example_70404u_family(6, 100), Error);
  CHECK_THROWS_AS(example_70404u_family(7, 4), Error);  // L not divisible by 3
}
