#include <doctest.h>

#include "admissibility_oracle.hpp"
#include "flatbound/boundary.hpp"
#include "flatbound/catalog.hpp"
#include "random_groups.hpp"

using namespace flatbound;

namespace {

void check_witnesses(const SpaceGroup& sg, const AdmissibilityReport& rep) {
  for (const auto& w : rep.witnesses) {
    CAPTURE(to_string(w.element));
    CHECK(verify_admissible(sg, w.element));
    CHECK(oracle::admissible_by_sampling(sg, w.element));
    CHECK(is_bieberbach(w.soul));
    CHECK(fingerprint(w.soul) == w.soul_fingerprint);
    // The soul is a double quotient: its holonomy is at most twice as large.
    CHECK(w.soul.point_group().order() <= 2 * sg.point_group().order());
  }
}

}  // namespace

TEST_CASE("decisions agree with a quarter-grid scan in low dimension") {
  for (const auto& e : catalog_entries()) {
    if (e.band || e.dim > 3) continue;
    for (auto style : e.styles) {
      CatalogParams p;
      p.style = style;
      const SpaceGroup sg = build_group(e.name, p);
      CAPTURE(e.name);
      CAPTURE(style_name(style));
      const AdmissibilityReport rep = decide_admissible(sg);
      const auto scan = oracle::grid_scan(sg);
      CHECK(rep.boundary == scan.has_value());
      CHECK(rep.boundary == (rep.witness() != nullptr));
      check_witnesses(sg, rep);
    }
  }
}

TEST_CASE("refutation tables cover every candidate") {
  for (const auto& name : {"C6", "C22", "HW1"}) {
    const SpaceGroup sg = build_group(name);
    const AdmissibilityReport rep = decide_admissible(sg);
    CAPTURE(name);
    CHECK_FALSE(rep.boundary);
    const auto cands = linear_candidates(sg);
    REQUIRE(rep.candidates.size() == cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
      CHECK(rep.candidates[i].linear == cands[i]);
      CHECK(rep.candidates[i].refuted());
      CHECK(rep.candidates[i].consistent == translation_constraints(sg, cands[i]).has_value());
      for (const auto& f : rep.candidates[i].families) {
        CHECK(f.blocking.has_value());
        CHECK_FALSE(f.witness.has_value());
      }
    }
  }
}

TEST_CASE("linear candidates normalize the point group and square into it") {
  for (const auto& name : {"C2", "C4", "B3", "HW7"}) {
    const SpaceGroup sg = build_group(name);
    const PointGroup& pg = sg.point_group();
    const auto cands = linear_candidates(sg);
    CHECK(cands.front().is_identity());
    for (const auto& A : cands) {
      CHECK(sg.form().preserved_by(A));
      CHECK(pg.contains(A * A));
      const IntMatrix Ai = unimodular_inverse(A);
      for (const auto& M : pg.elements) CHECK(pg.contains(A * M * Ai));
    }
  }
}

TEST_CASE("witness sets are sound in dimension four") {
  for (const auto& name : {"HW5", "HW8", "HW10"}) {
    const SpaceGroup sg = build_group(name);
    const AdmissibilityReport rep = decide_admissible(sg);
    CAPTURE(name);
    CHECK(rep.boundary);
    check_witnesses(sg, rep);
  }
}

TEST_CASE("lattice shape changes the available souls") {
  CatalogParams sq;
  sq.style = LatticeStyle::Square;
  bool quarter = false;
  for (const auto& w : decide_admissible(build_group("C2", sq)).witnesses)
    quarter |= w.soul_fingerprint.holonomy.invariants == std::vector<Integer>{4};
  CHECK(quarter);
  for (const auto& w : decide_admissible(build_group("C2")).witnesses) {
    CHECK(w.soul_fingerprint.holonomy.order <= 4);
    CHECK(w.soul_fingerprint.holonomy.invariants != std::vector<Integer>{4});
  }
}

TEST_CASE("odd cyclic holonomy: half of the N-th power") {
  for (const auto& name : {"C3", "C3xS1", "C5"}) {
    const SpaceGroup sg = build_group(name);
    CAPTURE(name);
    const AffineElement g = construct_odd_cyclic_involution(sg);
    CHECK(g.linear.is_identity());
    CHECK(verify_admissible(sg, g));
    CHECK(oracle::admissible_by_sampling(sg, g));
  }
  CHECK_THROWS_AS(construct_odd_cyclic_involution(build_group("C2")), Error);
  CHECK_THROWS_AS(construct_odd_cyclic_involution(build_group("T3")), Error);
}

TEST_CASE("holonomy two: constructed involutions on catalog and random groups") {
  CHECK(construct_z2_involution(build_group("K2")).kind == Z2Case::Line);
  CHECK(construct_z2_involution(build_group("C2")).kind == Z2Case::Line);
  CHECK(construct_z2_involution(build_group("B1")).kind == Z2Case::SingleClass);
  CHECK(construct_z2_involution(build_group("B2")).kind == Z2Case::TwoClass);
  CHECK_THROWS_AS(construct_z2_involution(build_group("C22")), Error);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const SpaceGroup sg = randgroups::random_z2_bieberbach(rng, 2 + trial % 3);
    const Z2Involution z = construct_z2_involution(sg);
    CAPTURE(to_string(sg.generators().front()));
    CHECK(verify_admissible(sg, z.element));
    CHECK(oracle::admissible_by_sampling(sg, z.element));
  }
}

TEST_CASE("decision options and preconditions") {
  CHECK_THROWS_AS(decide_admissible(build_group("T3"), {kDefaultIsometryCap, 1}), Error);
  CHECK(decide_admissible(build_group("T3"), {kDefaultIsometryCap, 2}).boundary);
  CHECK_THROWS_AS(decide_admissible(build_group("C4"), {4, 0}), Error);
  const SpaceGroup torsion(QuadraticForm(RatMatrix::diagonal({1, 1})), {{IntMatrix{{-1, 0}, {0, -1}}, {0, 0}}});
  CHECK_THROWS_AS(decide_admissible(torsion), Error);
}

TEST_CASE("pair enumeration in dimension two") {
  const auto pairs = boundary_soul_pairs({{"T2", build_group("T2")}, {"K2", build_group("K2")}});
  REQUIRE(pairs.size() == 3);
  CHECK(identify(pairs[0].boundary) == std::vector<std::string>{"T2"});
  CHECK(identify(pairs[0].soul) == std::vector<std::string>{"T2"});
  CHECK(identify(pairs[1].soul) == std::vector<std::string>{"K2"});
  CHECK(identify(pairs[2].boundary) == std::vector<std::string>{"K2"});
  CHECK(identify(pairs[2].soul) == std::vector<std::string>{"K2"});
}
