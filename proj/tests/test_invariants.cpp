#include <doctest.h>

#include "flatbound/catalog.hpp"
#include "flatbound/invariants.hpp"
#include "oracles.hpp"

using namespace flatbound;

namespace {

std::size_t betti_oracle(const SpaceGroup& sg) {
  // dim of the common fixed space: kernel of the stacked (M - I).
  const std::size_t n = sg.dim();
  const auto& els = sg.point_group().elements;
  RatMatrix D(n * els.size(), n);
  for (std::size_t k = 0; k < els.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) D(k * n + i, j) = els[k](i, j) - (i == j ? 1 : 0);
  return n - oracle::rat_rank(D);
}

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("holonomy, orientability and betti numbers of the closed catalog") {
  struct Row {
    const char* name;
    std::vector<Integer> holonomy;
    bool orientable;
  };
  const std::vector<Row> rows{
      {"T2", {}, true},           {"K2", ints({2}), false},     {"T3", {}, true},
      {"C2", ints({2}), true},    {"C3", ints({3}), true},      {"C4", ints({4}), true},
      {"C6", ints({2, 3}), true}, {"C22", ints({2, 2}), true},  {"B1", ints({2}), false},
      {"B2", ints({2}), false},   {"B3", ints({2, 2}), false},  {"B4", ints({2, 2}), false},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    const SpaceGroup sg = build_group(r.name);
    CHECK(is_bieberbach(sg));
    CHECK(holonomy_invariants(sg).invariants == r.holonomy);
    CHECK(is_orientable(sg) == r.orientable);
    CHECK(betti_one(sg) == betti_oracle(sg));
  }
  for (int i = 1; i <= 12; ++i) {
    const SpaceGroup sg = build_group("HW" + std::to_string(i));
    CAPTURE(i);
    CHECK(is_bieberbach(sg));
    CHECK(holonomy_invariants(sg).invariants == ints({2, 2, 2}));
    CHECK_FALSE(is_orientable(sg));
    CHECK(betti_one(sg) == betti_oracle(sg));
    CHECK(betti_one(sg) <= 1);
    if (i <= 2) CHECK(betti_one(sg) == 0);
  }
}

TEST_CASE("first homology agrees between the two presentations") {
  for (const auto& e : catalog_entries()) {
    if (e.band) continue;
    for (auto style : e.styles) {
      CatalogParams p;
      p.style = style;
      const SpaceGroup sg = build_group(e.name, p);
      CAPTURE(e.name);
      const AbelianGroup h = first_homology(sg);
      CHECK(h == abelianization(sg));
      CHECK(h.rank == betti_one(sg));
    }
  }
}

TEST_CASE("known first homology groups") {
  CHECK(to_string(abelianization(build_group("K2"))) == "Z^1 + Z/2");
  CHECK(to_string(abelianization(build_group("C22"))) == "Z/4 + Z/4");
  CHECK(to_string(abelianization(build_group("C6"))) == "Z^1");
  CHECK(to_string(abelianization(build_group("B1"))) == "Z^2 + Z/2");
  CHECK(to_string(abelianization(build_group("B4"))) == "Z^1 + Z/4");
}

TEST_CASE("abelian quotient against determinantal divisors") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix A = oracle::random_matrix(rng, 3, 3, -4, 4);
    const AbelianGroup a = abelian_quotient(A, 3);
    std::vector<Integer> expected;
    for (const auto& s : oracle::invariant_factors(A))
      if (s != 1) expected.push_back(s);
    CHECK(a.torsion == expected);
    CHECK(a.rank == 3 - oracle::int_rank(A));
  }
}

TEST_CASE("missing or broken presentations") {
  const SpaceGroup noRel(QuadraticForm(RatMatrix::diagonal({1, 1})),
                         {{IntMatrix{{1, 0}, {0, -1}}, {Rational(1, 2), 0}}});
  CHECK_THROWS_AS(first_homology(noRel), Error);
  CHECK(to_string(abelianization(noRel)) == "Z^1 + Z/2");
}

TEST_CASE("closed catalog fingerprints are pairwise distinct") {
  std::vector<std::pair<std::string, Fingerprint>> fps;
  for (const auto& e : catalog_entries())
    if (!e.band) fps.emplace_back(e.name, fingerprint(build_group(e.name)));
  for (std::size_t i = 0; i < fps.size(); ++i)
    for (std::size_t j = i + 1; j < fps.size(); ++j) {
      CAPTURE(fps[i].first);
      CAPTURE(fps[j].first);
      CHECK(fps[i].second != fps[j].second);
    }
}

TEST_CASE("identification is insensitive to lattice parameters") {
  CatalogParams p;
  p.a = 3, p.b = Rational(7, 2), p.c = 11;
  for (const auto& name : {"T3", "C2", "C22", "B1", "B2", "B3", "B4", "HW9"}) {
    CAPTURE(name);
    const auto ids = identify(build_group(name, p));
    CHECK(std::find(ids.begin(), ids.end(), name) != ids.end());
  }
}
