// flatbound command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 invalid or unsuitable group,
// 3 internal invariant violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flatbound/bands.hpp"
#include "flatbound/boundary.hpp"
#include "flatbound/catalog.hpp"
#include "flatbound_tools/document.hpp"
#include "flatbound_tools/report.hpp"

namespace fs = std::filesystem;
using namespace flatbound;
using namespace flatbound::tools;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A well-formed request on a group that does not qualify (not Bieberbach, etc.).
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::vector<std::string> params;
  std::size_t cap = kDefaultIsometryCap;
  std::size_t max_denominator = 0;
};

CatalogParams parse_params(const std::vector<std::string>& kv) {
  CatalogParams p;
  for (const auto& s : kv) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects k=v, got '" + s + "'");
    const std::string k = s.substr(0, eq), v = s.substr(eq + 1);
    if (k == "style") {
      const auto st = parse_style(v);
      if (!st) throw UsageError("unknown lattice style '" + v + "'");
      p.style = *st;
      continue;
    }
    Rational* slot = k == "a" ? &p.a : k == "b" ? &p.b : k == "c" ? &p.c : k == "d" ? &p.d : nullptr;
    if (!slot) throw UsageError("unknown parameter '" + k + "' (expected a, b, c, d or style)");
    try {
      *slot = parse_rational(Json(v), "--param " + k);
    } catch (const DocumentError& e) {
      throw UsageError(e.what());
    }
  }
  return p;
}

Json params_json(const CatalogParams& p) {
  return Json{{"a", p.a.get_str()}, {"b", p.b.get_str()}, {"c", p.c.get_str()}, {"d", p.d.get_str()},
              {"style", style_name(p.style)}};
}

struct Loaded {
  std::string label;
  std::optional<SpaceGroup> group;
  std::optional<FlatBand> band;
};

Loaded load(const std::string& arg, const Options& opt) {
  if (fs::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    const Json doc = parse_document(ss.str(), arg);
    if (is_band_document(doc)) return {arg, std::nullopt, band_from_json(doc)};
    return {arg, group_from_json(doc), std::nullopt};
  }
  const CatalogParams p = parse_params(opt.params);
  try {
    const CatalogEntry& e = catalog_entry(arg);
    if (e.band) return {arg, std::nullopt, build_band(arg, p)};
    return {arg, build_group(arg, p), std::nullopt};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownEntry || e.code() == ErrorCode::IncompatibleStyle ||
        e.code() == ErrorCode::InvalidArgument)
      throw UsageError(std::string(e.what()) + " (not a file either)");
    throw;
  }
}

SpaceGroup load_group(const std::string& arg, const Options& opt) {
  Loaded l = load(arg, opt);
  if (!l.group) throw UsageError(arg + " is a band; this command expects a closed group");
  return std::move(*l.group);
}

FlatBand load_band(const std::string& arg, const Options& opt) {
  Loaded l = load(arg, opt);
  if (!l.band) throw UsageError(arg + " is not a band");
  return std::move(*l.band);
}

void require_valid(const SpaceGroup& sg) {
  if (sg.valid()) return;
  std::string msg = "invalid space group:";
  for (const auto& d : sg.diagnostics()) msg += std::string("\n  [") + diagnostic_kind_name(d.kind) + "] " + d.message;
  throw InvalidInput(msg);
}

void require_bieberbach(const SpaceGroup& sg) {
  require_valid(sg);
  if (const auto tw = torsion_witness(sg))
    throw InvalidInput("group has torsion: " + to_string(sg.lift(tw->element)) + " shifted by " +
                       to_string(to_rational(tw->shift)) + " has a fixed point");
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string holonomy_text(const HolonomyType& h) {
  if (!h.abelian) return "non-abelian of order " + std::to_string(h.order);
  std::string s = "[";
  for (std::size_t i = 0; i < h.invariants.size(); ++i) s += (i ? "," : "") + h.invariants[i].get_str();
  return s + "] (order " + std::to_string(h.order) + ")";
}

int cmd_catalog(const Options& opt) {
  Json rows = Json::array();
  for (const auto& e : catalog_entries()) {
    Json styles = Json::array();
    for (auto s : e.styles) styles.push_back(style_name(s));
    rows.push_back({{"name", e.name}, {"dimension", e.dim}, {"kind", e.band ? "band" : "closed"},
                    {"test_only", e.test_only}, {"styles", styles}, {"description", e.description}});
  }
  if (opt.json) {
    print(Json{{"entries", rows}});
    return kOk;
  }
  for (const auto& r : rows) {
    std::string styles;
    for (const auto& s : r["styles"]) styles += (styles.empty() ? "" : ",") + s.get<std::string>();
    std::cout << std::left << std::setw(7) << r["name"].get<std::string>() << " dim " << r["dimension"].get<std::size_t>()
              << "  " << std::setw(6) << r["kind"].get<std::string>() << "  " << std::setw(24) << styles << " "
              << r["description"].get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_show(const std::string& name, const Options& opt) {
  if (fs::is_regular_file(name)) throw UsageError("show takes a catalog name");
  const CatalogParams p = parse_params(opt.params);
  const Loaded l = load(name, opt);
  CatalogParams used = p;
  used.style = catalog_entry(name).styles.size() == 1 ? catalog_entry(name).styles.front() : p.style;
  const Json meta{{"name", name}, {"parameters", params_json(used)}};
  print(l.group ? group_to_json(*l.group, meta) : band_to_json(*l.band, meta));
  return kOk;
}

int cmd_check(const std::string& arg, const Options& opt) {
  const Loaded l = load(arg, opt);
  const SpaceGroup& sg = l.group ? *l.group : l.band->base;
  const Json r = check_report(sg);
  if (opt.json) {
    print(r);
  } else {
    std::cout << "source:      " << arg << (l.band ? " (band; reporting its soul)" : "") << "\n";
    std::cout << "valid:       " << (sg.valid() ? "yes" : "no") << "\n";
    for (const auto& d : sg.diagnostics()) std::cout << "  [" << diagnostic_kind_name(d.kind) << "] " << d.message << "\n";
    if (sg.valid()) {
      const Fingerprint f = fingerprint(sg);
      std::cout << "bieberbach:  " << (r["bieberbach"].get<bool>() ? "yes" : "no") << "\n";
      if (!r["torsion_witness"].is_null())
        std::cout << "  fixed-point element: linear " << r["torsion_witness"]["linear"].dump() << " translation "
                  << r["torsion_witness"]["translation"].dump() << "\n";
      std::cout << "orientable:  " << (f.orientable ? "yes" : "no") << "\n";
      std::cout << "betti1:      " << f.betti1 << "\n";
      std::cout << "holonomy:    " << holonomy_text(f.holonomy) << "\n";
      std::cout << "H1:          " << to_string(f.h1) << "\n";
      if (r.contains("h1_from_relators") && r["h1_from_relators"].contains("text"))
        std::cout << "H1 (relators): " << r["h1_from_relators"]["text"].get<std::string>() << "\n";
      std::cout << "fingerprint: " << to_string(f) << "\n";
      std::cout << "identified:  " << names_or_dash(r["identified_as"].get<std::vector<std::string>>()) << "\n";
    }
  }
  return sg.valid() && r["bieberbach"].get<bool>() ? kOk : kInvalid;
}

int cmd_boundary(const std::string& arg, const Options& opt) {
  const SpaceGroup sg = load_group(arg, opt);
  require_bieberbach(sg);
  const AdmissibilityReport rep = decide_admissible(sg, {opt.cap, opt.max_denominator});
  const Json r = admissibility_json(sg, rep);
  if (opt.json) {
    print(r);
    return kOk;
  }
  std::cout << "decision: " << r["decision"].get<std::string>() << "\n";
  if (!r["witness"].is_null()) {
    std::cout << "witness:  linear " << r["witness"]["linear"].dump() << " translation "
              << r["witness"]["translation"].dump() << "\n";
    std::cout << "soul:     " << names_or_dash(r["soul"]["identified_as"].get<std::vector<std::string>>()) << "  ["
              << to_string(rep.witness()->soul_fingerprint) << "]\n";
  }
  std::cout << "candidates (" << rep.candidates.size() << "):\n";
  for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
    const Json& c = r["candidates"][i];
    std::cout << "  " << std::setw(3) << i << " " << c["linear"].dump() << "  ";
    if (!c["consistent"].get<bool>()) {
      std::cout << "refuted: no congruence solution\n";
      continue;
    }
    std::cout << (c["refuted"].get<bool>() ? "refuted" : "admissible") << "\n";
    for (const auto& f : c["families"]) {
      std::cout << "        t = " << f["point"].dump();
      if (!f["directions"].empty()) std::cout << " + span" << f["directions"].dump();
      if (f.contains("blocking_element"))
        std::cout << "  blocked (" << f["reason"].get<std::string>() << ") by linear part "
                  << f["blocking_element"]["linear"].dump() << "\n";
      else
        std::cout << "  witness #" << f["witness_index"].get<std::size_t>() << "\n";
    }
  }
  if (!rep.witnesses.empty()) {
    std::cout << "witnesses:\n";
    for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
      const Json& w = r["witnesses"][i];
      std::cout << "  #" << i << " linear " << w["element"]["linear"].dump() << " translation "
                << w["element"]["translation"].dump() << "  soul "
                << names_or_dash(w["soul_identified_as"].get<std::vector<std::string>>()) << "\n";
    }
  }
  return kOk;
}

int cmd_pairs(std::size_t dim, const Options& opt) {
  std::vector<NamedGroup> in;
  for (const auto& e : catalog_entries()) {
    if (e.band || e.test_only || e.dim != dim) continue;
    for (auto style : e.styles) {
      CatalogParams p = parse_params(opt.params);
      p.style = style;
      in.push_back({e.name + "/" + style_name(style), build_group(e.name, p)});
    }
  }
  if (in.empty()) throw UsageError("no catalog entries of dimension " + std::to_string(dim));
  const auto pairs = boundary_soul_pairs(in, {opt.cap, opt.max_denominator});
  const Json r = pairs_json(pairs, dim);
  if (opt.json) {
    print(r);
    return kOk;
  }
  std::cout << "(boundary, soul) pairs in dimension " << dim << ": " << pairs.size() << "\n";
  for (const auto& p : r["pairs"])
    std::cout << "  (" << names_or_dash(p["boundary_identified_as"].get<std::vector<std::string>>()) << ", "
              << names_or_dash(p["soul_identified_as"].get<std::vector<std::string>>()) << ")  from "
              << p["boundary"].get<std::string>() << " via linear " << p["witness"]["linear"].dump()
              << " translation " << p["witness"]["translation"].dump() << "\n";
  return kOk;
}

int report_construction(const SpaceGroup& result, const std::string& what, const Options& opt) {
  const Json r = construction_json(result);
  if (opt.json) {
    print(r);
    return kOk;
  }
  std::cout << what << ": " << names_or_dash(r["identified_as"].get<std::vector<std::string>>()) << "\n";
  std::cout << "fingerprint: " << to_string(fingerprint(result)) << "\n";
  std::cout << r["group"].dump(2) << "\n";
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"flatbound: compact flat manifolds with totally geodesic boundary"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--param", opt.params, "Catalog parameter k=v (a, b, c, d, style)");
  app.add_option("--cap", opt.cap, "Largest form isometry group to enumerate");
  app.add_option("--max-denominator", opt.max_denominator, "Bound for the witness grid scan (0 = unbounded)");

  std::string target, target2;
  std::size_t dim = 3;
  auto* catalog = app.add_subcommand("catalog", "List catalog entries")->fallthrough();
  auto* show = app.add_subcommand("show", "Emit the JSON document of a catalog entry")->fallthrough();
  show->add_option("name", target, "Catalog name")->required();
  auto* check = app.add_subcommand("check", "Validate a group and print its invariants")->fallthrough();
  check->add_option("source", target, "File or catalog name")->required();
  auto* boundary = app.add_subcommand("boundary", "Decide whether the manifold is a geodesic boundary")->fallthrough();
  boundary->add_option("source", target, "File or catalog name")->required();
  auto* pairs = app.add_subcommand("pairs", "Enumerate (boundary, soul) pairs over the catalog")->fallthrough();
  pairs->add_option("--dim", dim, "Dimension of the boundary manifolds")->required();
  auto* dbl = app.add_subcommand("double", "Double a band along its boundary")->fallthrough();
  dbl->add_option("band", target, "Band file or catalog name")->required();
  auto* glue_cmd = app.add_subcommand("glue", "Glue two bands along their common boundary")->fallthrough();
  glue_cmd->add_option("band1", target, "First band")->required();
  glue_cmd->add_option("band2", target2, "Second band")->required();
  auto* cover = app.add_subcommand("cover", "Orientation double cover")->fallthrough();
  cover->add_option("source", target, "File or catalog name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*catalog) return cmd_catalog(opt);
  if (*show) return cmd_show(target, opt);
  if (*check) return cmd_check(target, opt);
  if (*boundary) return cmd_boundary(target, opt);
  if (*pairs) return cmd_pairs(dim, opt);
  if (*dbl) return report_construction(double_band(load_band(target, opt)), "double", opt);
  if (*glue_cmd) return report_construction(glue(load_band(target, opt), load_band(target2, opt)), "glue", opt);
  if (*cover) {
    const SpaceGroup sg = load_group(target, opt);
    require_valid(sg);
    return report_construction(orientation_cover(sg), "orientation cover", opt);
  }
  return kUsage;
}

bool input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPositiveDefinite:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NotCrystallographic:
    case ErrorCode::NotBieberbach:
    case ErrorCode::NotAHomomorphism:
    case ErrorCode::TrivialSign:
    case ErrorCode::AlreadyOrientable:
    case ErrorCode::BoundaryMismatch:
    case ErrorCode::InfiniteOrder:
    case ErrorCode::CapExceeded:
    case ErrorCode::MissingPresentation:
    case ErrorCode::NonIntegralRelator:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DocumentError& e) {
    std::cerr << "invalid document: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error(e.code()) ? kInvalid : kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
