#pragma once

// JSON group documents. Field names are fixed: dimension, gram, generators
// (linear, translation), relators, metadata. Rationals are "p/q" strings.
// A band is {"base": <group document>, "flip": {"generators": [...],
// "lattice": [...]}, "width": "p/q"}.

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "flatbound/bands.hpp"
#include "flatbound/space_group.hpp"

namespace flatbound::tools {

using Json = nlohmann::ordered_json;

// Malformed document; `where` is a path such as "generators[1].translation[0]".
class DocumentError : public std::runtime_error {
public:
  DocumentError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

private:
  std::string where_;
};

Rational parse_rational(const Json& j, const std::string& where);
Json rational_json(const Rational& q);
Json vector_json(const RatVector& v);
Json matrix_json(const IntMatrix& m);
Json matrix_json(const RatMatrix& m);
Json element_json(const AffineElement& e);

// The group is constructed but not validated; callers inspect diagnostics().
// Throws DocumentError on shape errors, flatbound::Error for a bad Gram matrix.
SpaceGroup group_from_json(const Json& doc);
Json group_to_json(const SpaceGroup& sg, const Json& metadata = Json::object());

bool is_band_document(const Json& doc);
FlatBand band_from_json(const Json& doc);
Json band_to_json(const FlatBand& band, const Json& metadata = Json::object());

// Parses text; JSON syntax errors become DocumentError with line/column.
Json parse_document(const std::string& text, const std::string& source);

}  // namespace flatbound::tools
