#include <doctest.h>

#include "framelab/operator_rep.hpp"
#include "util.hpp"

using namespace framelab;

namespace {

FrameFamily family_from(const CMatrix& m) {
  FrameFamily fam;
  fam.vectors = m;
  return fam;
}

}  // namespace

TEST_CASE("right_shift_matrix zero-fill and cyclic variants") {
  CMatrix z = right_shift_matrix(3, ShiftMode::ZeroFill);
  CMatrix c = right_shift_matrix(3, ShiftMode::Cyclic);
  CVector e0 = CVector::Zero(3);
  e0(0) = 1.0;
  CVector e2 = CVector::Zero(3);
  e2(2) = 1.0;
  CHECK((z * e0 - CVector(c * e0)).norm() <= 1e-15);     // both send e0 -> e1
  CHECK((z * e2).norm() <= 1e-15);                       // falls off the window
  CHECK(std::abs((c * e2)(0) - Complex(1.0)) <= 1e-15);  // wraps around
}

TEST_CASE("iteration operator for an orthonormal shift sequence is the shift") {
  const int dim = 5;
  FrameFamily fam = family_from(CMatrix::Identity(dim, dim));  // e0..e4 = S^k e0
  Tolerance tol;
  auto [t, residual] = construct_iteration_operator(fam, tol);
  CHECK(residual <= 1e-12);
  for (int k = 0; k + 1 < dim; ++k)
    CHECK((t * fam.vectors.col(k) - fam.vectors.col(k + 1)).norm() <= 1e-12);
  CHECK(operator_norm(t) <= 1.0 + 1e-10);
}

TEST_CASE("inconsistent successor requirements raise representation-impossible") {
  // (v, w, v, z): needs T v = w and T v = z with w != z.
  CVector v = testutil::random_vector(4, 1).normalized();
  CVector w = testutil::random_vector(4, 2).normalized();
  CVector z = testutil::random_vector(4, 3).normalized();
  CMatrix m(4, 4);
  m.col(0) = v;
  m.col(1) = w;
  m.col(2) = v;
  m.col(3) = z;
  Tolerance tol;
  CHECK_THROWS_AS(construct_iteration_operator(family_from(m), tol), Error);
  try {
    construct_iteration_operator(family_from(m), tol);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RepresentationImpossible);
  }
}

TEST_CASE("a repeated single vector admits the exact rank-one interpolant") {
  // (v, v) is consistently interpolated by T = v v* / ||v||^2; the
  // constructor succeeds with a tiny residual rather than rejecting.
  CVector v = testutil::random_vector(4, 8).normalized();
  CMatrix m(4, 2);
  m.col(0) = v;
  m.col(1) = v;
  Tolerance tol;
  auto [t, residual] = construct_iteration_operator(family_from(m), tol);
  CHECK(residual <= 1e-12);
  CHECK((t - v * v.adjoint()).norm() <= 1e-10);
}

TEST_CASE("aldroubi_family matches its closed form and recovers the diagonal") {
  FrameFamily one = aldroubi_family(1, 1);
  CHECK(std::abs(one.vectors(0, 0) - Complex(std::sqrt(3.0) / 2.0)) <= 1e-15);

  FrameFamily two = aldroubi_family(2, 2);
  // second vector is D g with D = diag(1/2, 3/4)
  CHECK(std::abs(two.vectors(0, 1) - Complex(0.5 * std::sqrt(3.0) / 2.0)) <= 1e-14);
  CHECK(std::abs(two.vectors(1, 1) - Complex(0.75 * std::sqrt(1.0 - 0.75 * 0.75))) <= 1e-14);

  const int n = 60;
  FrameFamily fam = aldroubi_family(n, n);
  Tolerance tol;
  auto [t, residual] = construct_iteration_operator(fam, tol);
  // The returned operator uses the 1e-10 rank cutoff; on this doubly
  // exponentially conditioned family its residual sits around 1e-8, so the
  // regression bound leaves headroom above that level.
  CHECK(residual <= 1e-6);
  CMatrix d = aldroubi_operator(n);
  // Agreement on the span, weighted by the synthesis matrix.
  double dev = ((t - d) * fam.vectors).norm() / fam.vectors.norm();
  CHECK(dev <= 1e-6);
  CHECK(operator_norm(t) < 1.0);
}

TEST_CASE("iteration operator is equivariant under a unitary change of frame") {
  // Well-conditioned family: 10 generic vectors in C^20, so the head has
  // full column rank and the interpolation is exact.
  FrameFamily fam;
  fam.vectors = testutil::random_matrix(20, 10, 61);
  Tolerance tol;
  auto [t, r1] = construct_iteration_operator(fam, tol);
  CMatrix q = testutil::random_unitary(20, 13);
  FrameFamily rotated = fam;
  rotated.vectors = q * fam.vectors;
  auto [t2, r2] = construct_iteration_operator(rotated, tol);
  CHECK((t2 - q * t * q.adjoint()).norm() <= 1e-10);
}

TEST_CASE("shift residual vanishes for linearly independent families") {
  FrameFamily fam = random_onb(4, 3, "b");
  CHECK(shift_invariance_residual(fam, Tolerance{}) == 0.0);
}

TEST_CASE("circulant orbit kernels are cyclically shift invariant") {
  // The window length is a multiple of the ambient dimension so the cyclic
  // coefficient wrap matches a whole number of shift periods.
  FrameFamily fam = circulant_orbit_family(8, 16, 1, 42);
  CHECK(fam.index.kind == IndexConvention::Kind::IntWindow);
  double res = shift_invariance_residual(fam, Tolerance{}, ShiftMode::Cyclic);
  CHECK(res <= 1e-10);
}

TEST_CASE("boundedness profile: orthonormal shift ladder is bounded with norm 1") {
  auto gen = [](int size) {
    FrameFamily f;
    f.vectors = CMatrix::Identity(size, size);
    return f;
  };
  RepresentationDiagnostics d = boundedness_profile(gen, {8, 16, 32}, Tolerance{});
  CHECK(d.verdict == Verdict::BoundedLikely);
  REQUIRE(d.norm_profile.size() == 3);
  for (auto& [size, norm] : d.norm_profile) CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("boundedness profile: aldroubi ladder plateaus below 1") {
  auto gen = [](int size) { return aldroubi_family(size, size); };
  RepresentationDiagnostics d = boundedness_profile(gen, {50, 100, 200}, Tolerance{});
  CHECK(d.verdict == Verdict::BoundedLikely);
  for (auto& [size, norm] : d.norm_profile) {
    CHECK(norm < 1.0);
    CHECK(norm > 0.99);
  }
}

TEST_CASE("tail frame bounds for an orthonormal basis detect removed elements") {
  FrameFamily fam = family_from(CMatrix::Identity(12, 12));
  Tolerance tol;
  // M = N+1 removes nothing: the subfamily is the whole basis.
  auto full = tail_frame_check(fam, 3, {4}, tol);
  CHECK(full[0].second == doctest::Approx(1.0).epsilon(1e-12));
  // M = N+3 removes two basis vectors: the span is broken, A_M ~ 0.
  auto broken = tail_frame_check(fam, 3, {6}, tol);
  CHECK(broken[0].second <= 1e-20);
}

TEST_CASE("tail frame bounds of the aldroubi family stay positive") {
  FrameFamily fam = aldroubi_family(200, 200);
  auto rows = tail_frame_check(fam, 5, {10, 20, 40}, Tolerance{});
  REQUIRE(rows.size() == 3);
  for (auto& [m, a] : rows) CHECK(a > 0.0);
}

TEST_CASE("tail_frame_check validates its window") {
  FrameFamily fam = family_from(CMatrix::Identity(6, 6));
  Tolerance tol;
  CHECK_THROWS_AS(tail_frame_check(fam, 3, {3}, tol), Error);  // M <= N
  CHECK_THROWS_AS(tail_frame_check(fam, 3, {6}, tol), Error);  // M >= K
  FrameFamily zfam = fam;
  zfam.index.kind = IndexConvention::Kind::IntWindow;
  CHECK_THROWS_AS(tail_frame_check(zfam, 1, {3}, tol), Error);  // needs Nat0
}

TEST_CASE("interleaving classification of label orderings") {
  auto make = [](const std::vector<std::string>& labels) {
    FrameFamily f;
    int k = static_cast<int>(labels.size());
    f.vectors = CMatrix::Identity(k, k);
    f.labels = labels;
    return f;
  };
  // Strict alternation: no same-label successor pairs.
  InterleavingClassification c1 = interleaving_classify(make({"e", "x", "e", "x", "e", "x"}));
  CHECK(c1.i2.empty());
  CHECK(c1.i4.empty());
  CHECK(c1.predicted_unbounded);

  // Blocks of two: all four pair types occur.
  InterleavingClassification c2 = interleaving_classify(make({"e", "e", "x", "x", "e", "e", "x", "x"}));
  CHECK_FALSE(c2.i1.empty());
  CHECK_FALSE(c2.i2.empty());
  CHECK_FALSE(c2.i3.empty());
  CHECK_FALSE(c2.i4.empty());
  CHECK_FALSE(c2.predicted_unbounded);

  // All of one basis first: I3 = {transition}, I2 and I4 nonempty.
  InterleavingClassification c3 = interleaving_classify(make({"e", "e", "e", "x", "x", "x"}));
  CHECK_FALSE(c3.i2.empty());
  CHECK_FALSE(c3.i4.empty());
  CHECK_FALSE(c3.predicted_unbounded);

  // Label validation: one label only is rejected.
  CHECK_THROWS_AS(interleaving_classify(make({"e", "e"})), Error);
}

TEST_CASE("interleave_onbs follows the pattern and detects exhaustion") {
  FrameFamily e = random_onb(3, 1, "e");
  FrameFamily x = random_onb(3, 2, "x");
  InterleavePattern alt;
  FrameFamily merged = interleave_onbs(e, x, alt);
  REQUIRE(merged.count() == 6);
  REQUIRE(merged.labels.has_value());
  CHECK((*merged.labels)[0] == "e");
  CHECK((*merged.labels)[1] == "x");
  CHECK((merged.vectors.col(0) - e.vectors.col(0)).norm() <= 1e-15);
  CHECK((merged.vectors.col(1) - x.vectors.col(0)).norm() <= 1e-15);
}

TEST_CASE("interleave_onbs block pattern and truncation") {
  FrameFamily e = random_onb(4, 1, "e");
  FrameFamily x = random_onb(4, 2, "x");
  InterleavePattern block;
  block.kind = InterleavePattern::Kind::Block;
  block.block = 2;
  FrameFamily merged = interleave_onbs(e, x, block);
  CHECK((*merged.labels)[0] == "e");
  CHECK((*merged.labels)[1] == "e");
  CHECK((*merged.labels)[2] == "x");
  CHECK((*merged.labels)[3] == "x");

  InterleavePattern custom;
  custom.kind = InterleavePattern::Kind::Custom;
  custom.sources = {0, 0, 0, 0, 0};  // five from a 4-element source: exhausted
  CHECK_THROWS_AS(interleave_onbs(e, x, custom), Error);
}

TEST_CASE("alternating two-ONB ladder norms grow across truncation sizes") {
  Tolerance tol;
  double prev = 0.0;
  for (int size : {32, 64, 128}) {
    FrameFamily fam = alternating_two_onb_family(128, size, 3ull);
    auto [t, residual] = construct_iteration_operator(fam, tol);
    CHECK(residual <= 1e-10);
    double norm = operator_norm(t);
    CHECK(norm > prev);
    prev = norm;
  }
  CHECK(prev > 10.0);  // the largest truncation is far from any bounded plateau
}

TEST_CASE("random_onb is unitary and deterministic in the seed") {
  FrameFamily a = random_onb(6, 99, "a");
  FrameFamily b = random_onb(6, 99, "a");
  CHECK((a.vectors - b.vectors).norm() == 0.0);
  CHECK((a.vectors.adjoint() * a.vectors - CMatrix::Identity(6, 6)).norm() <= 1e-12);
  FrameFamily c = random_onb(6, 100, "a");
  CHECK((a.vectors - c.vectors).norm() > 1e-3);
}
