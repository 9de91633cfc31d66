#include "flatbound_tools/document.hpp"

#include <regex>

namespace flatbound::tools {

namespace {

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string field(const std::string& where, const char* name) { return where.empty() ? name : where + "." + name; }

const Json& require(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw DocumentError(where.empty() ? "document" : where, "expected an object");
  const auto it = obj.find(name);
  if (it == obj.end()) throw DocumentError(field(where, name), "missing field");
  return *it;
}

const Json& require_array(const Json& j, const std::string& where, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) throw DocumentError(where, "expected an array");
  if (size && j.size() != *size)
    throw DocumentError(where, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  return j;
}

Integer parse_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    static const std::regex re("-?[0-9]+");
    const auto& s = j.get_ref<const std::string&>();
    if (std::regex_match(s, re)) return Integer(s);
  }
  throw DocumentError(where, "expected an integer");
}

int parse_sign(const Json& j, const std::string& where) {
  const Integer v = parse_integer(j, where);
  if (v != 1 && v != -1) throw DocumentError(where, "expected +1 or -1");
  return v == 1 ? 1 : -1;
}

}  // namespace

Rational parse_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(parse_integer(j, where));
  if (!j.is_string()) throw DocumentError(where, "expected a rational string \"p/q\"");
  static const std::regex re("(-?[0-9]+)(?:/([0-9]+))?");
  std::smatch m;
  const auto& s = j.get_ref<const std::string&>();
  if (!std::regex_match(s, m, re)) throw DocumentError(where, "malformed rational '" + s + "'");
  const Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
  if (den == 0) throw DocumentError(where, "zero denominator");
  return ratio(Integer(m[1].str()), den);
}

Json rational_json(const Rational& q) { return q.get_str(); }

Json vector_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).fits_slong_p())
        row.push_back(m(i, j).get_si());
      else
        row.push_back(m(i, j).get_str());
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json matrix_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

Json element_json(const AffineElement& e) {
  Json out = Json::object();
  out["linear"] = matrix_json(e.linear);
  out["translation"] = vector_json(e.translation);
  return out;
}

SpaceGroup group_from_json(const Json& doc) {
  const Json& dj = require(doc, "dimension", "");
  if (!dj.is_number_unsigned() || dj.get<std::size_t>() == 0 || dj.get<std::size_t>() > 16)
    throw DocumentError("dimension", "expected a positive integer (at most 16)");
  const std::size_t n = dj.get<std::size_t>();

  const Json& gj = require_array(require(doc, "gram", ""), "gram", n);
  RatMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = require_array(gj[i], at("gram", i), n);
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = parse_rational(row[j], at(at("gram", i), j));
  }

  std::vector<AffineElement> gens;
  const Json& gens_j = require_array(require(doc, "generators", ""), "generators");
  for (std::size_t g = 0; g < gens_j.size(); ++g) {
    const std::string w = at("generators", g);
    const Json& lin = require_array(require(gens_j[g], "linear", w), w + ".linear", n);
    AffineElement e{IntMatrix(n, n), RatVector(n)};
    for (std::size_t i = 0; i < n; ++i) {
      const Json& row = require_array(lin[i], at(w + ".linear", i), n);
      for (std::size_t j = 0; j < n; ++j) e.linear(i, j) = parse_integer(row[j], at(at(w + ".linear", i), j));
    }
    const Json& tr = require_array(require(gens_j[g], "translation", w), w + ".translation", n);
    for (std::size_t i = 0; i < n; ++i) e.translation[i] = parse_rational(tr[i], at(w + ".translation", i));
    gens.push_back(std::move(e));
  }

  std::optional<std::vector<Word>> relators;
  if (const auto it = doc.find("relators"); it != doc.end() && !it->is_null()) {
    relators.emplace();
    const Json& rs = require_array(*it, "relators");
    for (std::size_t r = 0; r < rs.size(); ++r) {
      const Json& w = require_array(rs[r], at("relators", r));
      Word word;
      for (std::size_t k = 0; k < w.size(); ++k) {
        const Integer letter = parse_integer(w[k], at(at("relators", r), k));
        if (letter == 0 || abs(letter) > static_cast<long>(gens.size()))
          throw DocumentError(at(at("relators", r), k), "generator index out of range (1-based, signed)");
        word.push_back(static_cast<int>(letter.get_si()));
      }
      relators->push_back(std::move(word));
    }
  }
  return SpaceGroup(QuadraticForm(std::move(gram)), std::move(gens), std::move(relators));
}

Json group_to_json(const SpaceGroup& sg, const Json& metadata) {
  Json out = Json::object();
  out["dimension"] = sg.dim();
  out["gram"] = matrix_json(sg.form().gram());
  Json gens = Json::array();
  for (const auto& g : sg.generators()) gens.push_back(element_json(g));
  out["generators"] = std::move(gens);
  if (sg.relators()) {
    Json rs = Json::array();
    for (const auto& w : *sg.relators()) rs.push_back(w);
    out["relators"] = std::move(rs);
  }
  out["metadata"] = metadata;
  return out;
}

bool is_band_document(const Json& doc) { return doc.is_object() && doc.contains("base"); }

FlatBand band_from_json(const Json& doc) {
  SpaceGroup base = [&] {
    try {
      return group_from_json(require(doc, "base", ""));
    } catch (const DocumentError& e) {
      throw DocumentError("base." + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
  }();
  const Json& flip = require(doc, "flip", "");
  SignAssignment s;
  const Json& fg = require_array(require(flip, "generators", "flip"), "flip.generators", base.generators().size());
  for (std::size_t i = 0; i < fg.size(); ++i) s.generators.push_back(parse_sign(fg[i], at("flip.generators", i)));
  const Json& fl = require_array(require(flip, "lattice", "flip"), "flip.lattice", base.dim());
  for (std::size_t i = 0; i < fl.size(); ++i) s.lattice.push_back(parse_sign(fl[i], at("flip.lattice", i)));
  const Rational width = parse_rational(require(doc, "width", ""), "width");
  return make_band(std::move(base), std::move(s), width);
}

Json band_to_json(const FlatBand& band, const Json& metadata) {
  Json out = Json::object();
  out["base"] = group_to_json(band.base);
  out["flip"] = {{"generators", band.flip.generators}, {"lattice", band.flip.lattice}};
  out["width"] = rational_json(band.width);
  out["metadata"] = metadata;
  return out;
}

Json parse_document(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(source, e.what());
  }
}

}  // namespace flatbound::tools
