#include "flatbound_tools/report.hpp"

#include "flatbound/catalog.hpp"

namespace flatbound::tools {

namespace {

Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json names_json(const std::vector<std::string>& names) { return names; }

}  // namespace

std::string names_or_dash(const std::vector<std::string>& names) {
  if (names.empty()) return "-";
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : "/") + n;
  return s;
}

Json abelian_json(const AbelianGroup& a) {
  return Json{{"rank", a.rank}, {"torsion", integers(a.torsion)}, {"text", to_string(a)}};
}

Json fingerprint_json(const Fingerprint& f) {
  Json out = Json::object();
  out["dimension"] = f.dim;
  out["orientable"] = f.orientable;
  out["betti1"] = f.betti1;
  out["holonomy"] = {{"order", f.holonomy.order}, {"abelian", f.holonomy.abelian}, {"invariants", integers(f.holonomy.invariants)}};
  out["h1"] = abelian_json(f.h1);
  Json classes = Json::array();
  for (const auto& c : f.classes) classes.push_back({c.determinant, c.fixed_dim, c.vector_order.get_str()});
  out["element_classes"] = std::move(classes);
  Json subs = Json::array();
  for (const auto& s : f.subgroups) subs.push_back(fingerprint_json(s));
  out["index_two_subgroups"] = std::move(subs);
  return out;
}

Json check_report(const SpaceGroup& sg) {
  Json out = Json::object();
  out["valid"] = sg.valid();
  Json diags = Json::array();
  for (const auto& d : sg.diagnostics()) diags.push_back({{"kind", diagnostic_kind_name(d.kind)}, {"message", d.message}});
  out["diagnostics"] = std::move(diags);
  if (!sg.valid()) return out;

  const auto tw = torsion_witness(sg);
  out["bieberbach"] = !tw.has_value();
  if (tw) out["torsion_witness"] = element_json(sg.lift(tw->element) * AffineElement::pure_translation(to_rational(tw->shift)));
  else out["torsion_witness"] = nullptr;
  out["orientable"] = is_orientable(sg);
  out["betti1"] = betti_one(sg);
  out["point_group_order"] = sg.point_group().order();
  out["h1"] = abelian_json(abelianization(sg));
  if (sg.relators()) {
    try {
      out["h1_from_relators"] = abelian_json(first_homology(sg));
    } catch (const Error& e) {
      out["h1_from_relators"] = {{"error", e.what()}};
    }
  }
  out["fingerprint"] = fingerprint_json(fingerprint(sg));
  out["identified_as"] = names_json(identify(sg, true));
  return out;
}

Json admissibility_json(const SpaceGroup& sg, const AdmissibilityReport& report) {
  Json out = Json::object();
  out["decision"] = report.boundary ? "boundary" : "not-boundary";
  const PointGroup& pg = sg.point_group();
  if (const Witness* w = report.witness()) {
    out["witness"] = element_json(w->element);
    out["soul"] = {{"identified_as", names_json(identify(w->soul, true))}, {"fingerprint", fingerprint_json(w->soul_fingerprint)}};
  } else {
    out["witness"] = nullptr;
    out["soul"] = nullptr;
  }
  Json cands = Json::array();
  for (const auto& c : report.candidates) {
    Json cj = Json::object();
    cj["linear"] = matrix_json(c.linear);
    cj["consistent"] = c.consistent;
    cj["refuted"] = c.refuted();
    if (!c.consistent) cj["reason"] = "no-congruence-solution";
    Json fams = Json::array();
    for (const auto& f : c.families) {
      Json fj = Json::object();
      fj["point"] = vector_json(f.point);
      Json dirs = Json::array();
      for (const auto& d : f.directions) dirs.push_back(vector_json(to_rational(d)));
      fj["directions"] = std::move(dirs);
      if (f.blocking) {
        fj["reason"] = (c.linear * pg.elements[*f.blocking]).is_identity() ? "coset-meets-group" : "covered-by-torsion-locus";
        fj["blocking_element"] = element_json(sg.lift(*f.blocking));
      } else {
        fj["witness_index"] = *f.witness;
      }
      fams.push_back(std::move(fj));
    }
    cj["families"] = std::move(fams);
    cands.push_back(std::move(cj));
  }
  out["candidates"] = std::move(cands);
  Json wits = Json::array();
  for (const auto& w : report.witnesses)
    wits.push_back({{"candidate", w.candidate},
                    {"element", element_json(w.element)},
                    {"soul_identified_as", names_json(identify(w.soul, true))},
                    {"soul_summary", to_string(w.soul_fingerprint)}});
  out["witnesses"] = std::move(wits);
  return out;
}

Json pairs_json(const std::vector<SoulPair>& pairs, std::size_t dim) {
  Json out = Json::object();
  out["dimension"] = dim;
  Json rows = Json::array();
  for (const auto& p : pairs) {
    Json r = Json::object();
    r["boundary"] = p.boundary_label;
    r["boundary_identified_as"] = names_json(identify(p.boundary, true));
    r["soul_identified_as"] = names_json(identify(p.soul, true));
    r["soul_summary"] = to_string(p.soul);
    r["witness"] = element_json(p.witness);
    rows.push_back(std::move(r));
  }
  out["pairs"] = std::move(rows);
  out["count"] = pairs.size();
  return out;
}

Json construction_json(const SpaceGroup& result) {
  Json out = Json::object();
  out["identified_as"] = names_json(identify(result, true));
  out["fingerprint"] = fingerprint_json(fingerprint(result));
  out["group"] = group_to_json(result);
  return out;
}

}  // namespace flatbound::tools
