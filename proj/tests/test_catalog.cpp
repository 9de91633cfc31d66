#include <doctest.h>

#include "flatbound/bands.hpp"
#include "flatbound/catalog.hpp"

using namespace flatbound;

TEST_CASE("every entry builds in every style") {
  std::size_t count = 0;
  for (const auto& e : catalog_entries()) {
    for (auto style : e.styles) {
      CatalogParams p;
      p.style = style;
      CAPTURE(e.name);
      if (e.band) {
        const FlatBand b = build_band(e.name, p);
        CHECK(is_bieberbach(b.base));
        CHECK(b.base.dim() == e.dim);
      } else {
        const SpaceGroup sg = build_group(e.name, p);
        CHECK(sg.valid());
        CHECK(is_bieberbach(sg));
        CHECK(sg.dim() == e.dim);
        CHECK(sg.relators().has_value());
      }
      ++count;
    }
  }
  CHECK(catalog_entries().size() >= 26);
  CHECK(count > catalog_entries().size());
}

TEST_CASE("catalog lookups and parameter checks") {
  CHECK_THROWS_AS(catalog_entry("B5"), Error);
  CHECK_THROWS_AS(build_group("TT"), Error);
  CHECK_THROWS_AS(build_band("T3"), Error);
  CatalogParams hex;
  hex.style = LatticeStyle::Hexagonal;
  CHECK_THROWS_AS(build_group("B1", hex), Error);
  CatalogParams bad;
  bad.a = -1;
  CHECK_THROWS_AS(build_group("T3", bad), Error);
  // Generic requests on single-style entries are upgraded.
  CHECK(build_group("C4").point_group().order() == 4);
  CHECK(parse_style("square") == LatticeStyle::Square);
  CHECK_FALSE(parse_style("cubic").has_value());
}

TEST_CASE("identification names each closed entry") {
  for (const auto& e : catalog_entries()) {
    if (e.band) continue;
    for (auto style : e.styles) {
      CatalogParams p;
      p.style = style;
      CAPTURE(e.name);
      const auto names = identify(build_group(e.name, p), true);
      CHECK(names == std::vector<std::string>{e.name});
    }
  }
  CHECK(identify(build_group("C5")).empty());
}
