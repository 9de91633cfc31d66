#include <doctest.h>

#include "flatbound/catalog.hpp"
#include "flatbound/invariants.hpp"
#include "flatbound/subgroups.hpp"
#include "random_groups.hpp"

using namespace flatbound;

namespace {

bool has_kind(const SpaceGroup& sg, Diagnostic::Kind k) {
  for (const auto& d : sg.diagnostics())
    if (d.kind == k) return true;
  return false;
}

std::vector<SpaceGroup> closed_catalog() {
  std::vector<SpaceGroup> out;
  for (const auto& e : catalog_entries())
    if (!e.band) out.push_back(build_group(e.name));
  return out;
}

}  // namespace

TEST_CASE("affine elements compose and invert") {
  const AffineElement g{IntMatrix{{0, -1}, {1, 0}}, {Rational(1, 2), 0}};
  const AffineElement h{IntMatrix{{-1, 0}, {0, 1}}, {0, Rational(1, 3)}};
  const RatVector x{Rational(2, 7), 5};
  CHECK((g * h).apply(x) == g.apply(h.apply(x)));
  CHECK(g * g.inverse() == AffineElement::identity(2));
  CHECK(matrix_order(g.linear) == 4u);
  CHECK_FALSE(matrix_order(IntMatrix{{1, 1}, {0, 1}}).has_value());
  CHECK(orbit_sum(g.linear) == IntMatrix(2, 2));
}

TEST_CASE("validation reports each kind of defect") {
  const QuadraticForm square(RatMatrix::diagonal({1, 1}));
  const QuadraticForm rect(RatMatrix::diagonal({1, 4}));

  CHECK(has_kind(SpaceGroup(square, {{IntMatrix{{1, 1}, {0, 1}}, {0, 0}}}), Diagnostic::Kind::InfinitePointGroup));
  CHECK(has_kind(SpaceGroup(square, {{IntMatrix{{2, 0}, {0, 1}}, {0, 0}}}), Diagnostic::Kind::NonUnimodular));
  CHECK(has_kind(SpaceGroup(rect, {{IntMatrix{{0, 1}, {1, 0}}, {0, 0}}}), Diagnostic::Kind::FormNotPreserved));
  // (diag(1,-1), (1/3, 0)) squares to the non-lattice translation (2/3, 0).
  CHECK(has_kind(SpaceGroup(rect, {{IntMatrix{{1, 0}, {0, -1}}, {Rational(1, 3), 0}}}),
                 Diagnostic::Kind::CocycleViolation));
  const AffineElement glide{IntMatrix{{1, 0}, {0, -1}}, {Rational(1, 2), 0}};
  CHECK(has_kind(SpaceGroup(rect, {glide}, std::vector<Word>{{1}}), Diagnostic::Kind::BadRelator));
  CHECK(has_kind(SpaceGroup(rect, {glide}, std::vector<Word>{{2, 2}}), Diagnostic::Kind::BadRelator));
  const SpaceGroup k(rect, {glide}, std::vector<Word>{{1, 1}});
  CHECK(k.valid());
  CHECK(validate(k).empty());
  CHECK(SpaceGroup(rect, {glide * glide * glide}).valid());  // same group, other generator
  CHECK_THROWS_AS(SpaceGroup(square, {{IntMatrix{{1, 1}, {0, 1}}, {0, 0}}}).require_valid(), Error);
}

TEST_CASE("vector system is canonical and contains generators") {
  for (const auto& sg : closed_catalog()) {
    const PointGroup& pg = sg.point_group();
    CHECK(pg.elements.front().is_identity());
    for (std::size_t i = 0; i < pg.order(); ++i) {
      for (const auto& x : sg.vector(i)) CHECK((x >= 0 && x < 1));
      CHECK(pg.table[i][pg.inverse[i]] == 0);
    }
    for (const auto& g : sg.generators()) CHECK(sg.contains(g));
    CHECK_FALSE(sg.contains(AffineElement::pure_translation(RatVector(sg.dim(), Rational(1, 2)))));
  }
}

TEST_CASE("fixed point solver agrees with the orbit sum criterion") {
  std::mt19937_64 rng(29);
  std::vector<SpaceGroup> groups = closed_catalog();
  for (int i = 0; i < 60; ++i) groups.push_back(randgroups::random_crystallographic(rng, 2 + i % 3));
  for (const auto& sg : groups) {
    for (std::size_t i = 0; i < sg.point_group().order(); ++i) {
      oracle::for_each_box_point(sg.dim(), 1, [&](const IntVector& z) {
        const AffineElement g = sg.lift(i) * AffineElement::pure_translation(to_rational(z));
        const auto x = fixed_point_of(g);
        CHECK(x.has_value() == has_fixed_point_by_orbit_sum(g));
        CHECK(x.has_value() == oracle::has_fixed_point(g));
        if (x) CHECK(g.apply(*x) == *x);
      });
    }
  }
}

TEST_CASE("torsion witness agrees with brute-force enumeration") {
  std::mt19937_64 rng(31);
  std::vector<SpaceGroup> groups = closed_catalog();
  for (int i = 0; i < 60; ++i) groups.push_back(randgroups::random_crystallographic(rng, 2 + i % 2));
  int torsion = 0;
  for (const auto& sg : groups) {
    const auto w = torsion_witness(sg);
    if (w) {
      ++torsion;
      const AffineElement g = sg.lift(w->element) * AffineElement::pure_translation(to_rational(w->shift));
      CHECK(oracle::has_fixed_point(g));
    }
    CHECK(w.has_value() == oracle::finds_torsion(sg, 3, 1));
  }
  CHECK(torsion > 0);
}

TEST_CASE("standard form recovers the translation lattice") {
  // Generated by a glide whose square is 2x the first basis vector: lattice must be rebased.
  const QuadraticForm q(RatMatrix::diagonal({1, 1}));
  const AffineElement glide{IntMatrix{{1, 0}, {0, -1}}, {1, 0}};
  const Rebased r = standard_form(q, {glide}, {{2, 0}, {0, 1}});
  CHECK(r.group.valid());
  CHECK(is_bieberbach(r.group));
  CHECK(oracle::cofactor_det(to_integer(Rational(2) * r.basis)) == 8);  // lattice index 2: det(basis) = 2
  CHECK(r.group.form().gram() == RatMatrix::diagonal({4, 1}));
  CHECK_THROWS_AS(standard_form(q, {}, {{1, 0}}), Error);
}

TEST_CASE("fingerprint is invariant under basis change and conjugation") {
  std::mt19937_64 rng(37);
  for (const auto& name : {"K2", "C2", "C22", "B2", "B4", "HW6"}) {
    const SpaceGroup sg = build_group(name);
    const Fingerprint f = fingerprint(sg);
    for (int trial = 0; trial < 3; ++trial) {
      const IntMatrix U = oracle::random_unimodular(rng, sg.dim(), 6);
      CHECK(fingerprint(change_basis(sg, U)) == f);
      const auto iso = form_isometries(sg.form());
      const IntMatrix& A = iso[std::uniform_int_distribution<std::size_t>(0, iso.size() - 1)(rng)];
      const SpaceGroup conj = conjugate(sg, {A, randgroups::random_vector(rng, sg.dim(), 6)});
      REQUIRE(conj.valid());
      CHECK(fingerprint(conj) == f);
    }
  }
}

TEST_CASE("index-two subgroups and involution extensions are inverse") {
  const SpaceGroup t3 = build_group("T3");
  const AffineElement half = AffineElement::pure_translation({0, 0, Rational(1, 2)});
  const Rebased ext = extend_by_involution(t3, half);
  CHECK(ext.group.valid());
  const SignAssignment s = coset_sign(ext, t3);
  CHECK_FALSE(s.trivial());
  CHECK(fingerprint(index_two_subgroup(ext.group, s).group) == fingerprint(t3));

  const SpaceGroup c2 = build_group("C2");
  CHECK_THROWS_AS(extend_by_involution(c2, c2.generators().front()), Error);
  CHECK_THROWS_AS(extend_by_involution(c2, AffineElement::pure_translation({0, 0, Rational(1, 3)})), Error);
  CHECK(sign_homomorphisms(c2).size() == 7);
  CHECK(determinant_sign(build_group("B1")).generators == std::vector<int>{-1});
}
