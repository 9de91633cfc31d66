#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatbound/bands.hpp"
#include "flatbound/invariants.hpp"

namespace flatbound {

enum class LatticeStyle { Generic, Square, Hexagonal };

const char* style_name(LatticeStyle s);
std::optional<LatticeStyle> parse_style(const std::string& s);

struct CatalogParams {
  Rational a = 1, b = 2, c = 3, d = 5;
  LatticeStyle style = LatticeStyle::Generic;
};

struct CatalogEntry {
  std::string name;
  std::size_t dim;
  bool band;                          // builds a FlatBand rather than a closed group
  bool test_only;                     // not a manifold named in the literature list
  std::vector<LatticeStyle> styles;   // first one is the default
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();
// Throws UnknownEntry.
const CatalogEntry& catalog_entry(const std::string& name);

// Throws UnknownEntry (also for band entries), IncompatibleStyle, InvalidArgument.
// A Generic style request on an entry that only has one special style is upgraded to it.
SpaceGroup build_group(const std::string& name, const CatalogParams& params = {});
FlatBand build_band(const std::string& name, const CatalogParams& params = {});

// Names of closed catalog entries (default parameters, every supported style)
// whose fingerprint equals that of sg. Test-only entries are skipped unless asked.
std::vector<std::string> identify(const SpaceGroup& sg, bool include_test_entries = false);
std::vector<std::string> identify(const Fingerprint& f, bool include_test_entries = false);

}  // namespace flatbound
