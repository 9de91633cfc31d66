#include "flatbound/catalog.hpp"

#include <algorithm>
#include <map>

#include "flatbound/linalg.hpp"

namespace flatbound {

namespace {

using S = LatticeStyle;

const std::vector<S> kGeneric{S::Generic};
const std::vector<S> kAll{S::Generic, S::Square, S::Hexagonal};
const std::vector<S> kRect{S::Generic, S::Square};

AffineElement elem(IntMatrix M, std::vector<Rational> v) { return {std::move(M), RatVector(v.begin(), v.end())}; }

IntMatrix diag(std::initializer_list<int> d) {
  std::vector<Integer> v;
  for (int x : d) v.emplace_back(x);
  return IntMatrix::diagonal(v);
}

RatMatrix rdiag(std::vector<Rational> d) { return RatMatrix::diagonal(d); }

Rational sq(const Rational& x) { return x * x; }

// Gram matrix of the first two coordinates for the requested style; the rest diagonal.
RatMatrix planar_form(const CatalogParams& p, std::vector<Rational> rest) {
  const std::size_t n = 2 + rest.size();
  RatMatrix G(n, n);
  switch (p.style) {
    case S::Generic:
      G(0, 0) = sq(p.a), G(1, 1) = sq(p.b);
      break;
    case S::Square:
      G(0, 0) = G(1, 1) = sq(p.a);
      break;
    case S::Hexagonal:
      G(0, 0) = G(1, 1) = sq(p.a);
      G(0, 1) = G(1, 0) = -sq(p.a) / 2;
      break;
  }
  for (std::size_t i = 0; i < rest.size(); ++i) G(i + 2, i + 2) = rest[i];
  return G;
}

std::vector<Word> z2_power_relators(std::size_t k) {
  std::vector<Word> r;
  for (int i = 1; i <= static_cast<int>(k); ++i) r.push_back({i, i});
  for (int i = 1; i <= static_cast<int>(k); ++i)
    for (int j = i + 1; j <= static_cast<int>(k); ++j) r.push_back({i, j, -i, -j});
  return r;
}

// Generalized Hantzsche-Wendt 4-manifolds: three generators T S with S
// negating the listed axes and T the listed half-translations (x,y,z,t = 1..4).
struct HwRow {
  const char *t1, *s1, *t2, *s2, *t3, *s3;
};
const HwRow kHantzscheWendt[12] = {
    {"yt", "z", "z", "xt", "x", "yt"},   {"t", "z", "yz", "xt", "x", "yt"},
    {"t", "z", "yz", "xz", "x", "yz"},   {"yt", "z", "yz", "xz", "x", "yz"},
    {"y", "z", "t", "xz", "x", "yz"},    {"yz", "z", "t", "xz", "x", "yz"},
    {"y", "z", "yt", "xz", "x", "yz"},   {"xz", "z", "yt", "xz", "x", "yz"},
    {"yz", "z", "yt", "xz", "x", "yz"},  {"xyz", "z", "yt", "xz", "x", "yz"},
    {"y", "z", "yzt", "xz", "x", "yz"},  {"yz", "z", "yzt", "xz", "x", "yz"},
};

std::size_t axis(char c) {
  switch (c) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    case 't': return 3;
  }
  fail(ErrorCode::InvalidArgument, std::string("bad axis ") + c);
}

AffineElement hw_generator(const char* t, const char* s) {
  AffineElement e{IntMatrix::identity(4), RatVector(4)};
  for (; *s; ++s) e.linear(axis(*s), axis(*s)) = -1;
  for (; *t; ++t) e.translation[axis(*t)] = Rational(1, 2);
  return e;
}

SpaceGroup make(RatMatrix gram, std::vector<AffineElement> gens, std::vector<Word> relators) {
  SpaceGroup sg(QuadraticForm(std::move(gram)), std::move(gens), std::move(relators));
  sg.require_valid();
  return sg;
}

SpaceGroup klein(const CatalogParams& p, bool along_second) {
  const RatMatrix G = planar_form(p, {});
  if (along_second) return make(G, {elem(diag({-1, 1}), {0, Rational(1, 2)})}, {{1, 1}});
  return make(G, {elem(diag({1, -1}), {Rational(1, 2), 0})}, {{1, 1}});
}

const std::vector<CatalogEntry>& entries_table() {
  static const std::vector<CatalogEntry> table = [] {
    std::vector<CatalogEntry> t{
        {"T2", 2, false, false, kAll, "flat 2-torus"},
        {"K2", 2, false, false, kRect, "Klein bottle K_{a,b}, glide (x,y) -> (x+a/2,-y)"},
        {"T3", 3, false, false, kAll, "flat 3-torus"},
        {"C2", 3, false, false, kAll, "orientable, holonomy Z2 (half-turn screw)"},
        {"C3", 3, false, false, {S::Hexagonal}, "orientable, holonomy Z3 (screw of angle 2pi/3)"},
        {"C4", 3, false, false, {S::Square}, "orientable, holonomy Z4"},
        {"C6", 3, false, false, {S::Hexagonal}, "orientable, holonomy Z6"},
        {"C22", 3, false, false, kRect, "orientable, holonomy Z2xZ2 (Hantzsche-Wendt)"},
        {"B1", 3, false, false, kRect, "non-orientable, holonomy Z2, one glide class"},
        {"B2", 3, false, false, kRect, "non-orientable, holonomy Z2, two glide classes"},
        {"B3", 3, false, false, kRect, "non-orientable, holonomy Z2xZ2"},
        {"B4", 3, false, false, kRect, "non-orientable, holonomy Z2xZ2"},
    };
    for (int i = 1; i <= 12; ++i)
      t.push_back({"HW" + std::to_string(i), 4, false, false, kGeneric, "generalized Hantzsche-Wendt 4-manifold"});
    t.push_back({"MB", 1, true, false, kGeneric, "Moebius band over a circle of length a, width d"});
    t.push_back({"TT", 2, true, false, kGeneric, "band TT_{v,v',d} over the torus, v=(a,0), v'=(0,b)"});
    t.push_back({"TTr", 2, true, false, kGeneric, "band TT_{v',v,d}"});
    t.push_back({"TK", 2, true, false, kGeneric, "band TK_{a,b,d} over the Klein bottle"});
    t.push_back({"TKr", 2, true, false, kGeneric, "band TK_{b,a,d} (glide along the second axis)"});
    t.push_back({"KK", 2, true, false, kGeneric, "band KK_{a,b,d} over the Klein bottle"});
    t.push_back({"C3xS1", 4, false, true, {S::Hexagonal}, "test entry: C3 times a circle"});
    t.push_back({"C5", 5, false, true, kGeneric, "test entry: odd cyclic holonomy Z5 in dimension 5"});
    return t;
  }();
  return table;
}

LatticeStyle resolve_style(const CatalogEntry& e, LatticeStyle requested) {
  if (std::find(e.styles.begin(), e.styles.end(), requested) != e.styles.end()) return requested;
  if (requested == S::Generic && e.styles.size() == 1) return e.styles.front();
  fail(ErrorCode::IncompatibleStyle,
       e.name + " does not support the " + style_name(requested) + " lattice style");
}

void check_params(const CatalogParams& p) {
  for (const Rational* x : {&p.a, &p.b, &p.c, &p.d})
    if (*x <= 0) fail(ErrorCode::InvalidArgument, "catalog parameters must be positive");
}

SpaceGroup c5_group(const CatalogParams& p) {
  // Companion matrix of x^4+x^3+x^2+x+1 plus a screw axis.
  IntMatrix M(5, 5);
  for (std::size_t i = 1; i < 4; ++i) M(i, i - 1) = 1;
  for (std::size_t i = 0; i < 4; ++i) M(i, 3) = -1;
  M(4, 4) = 1;
  // Invariant form: sum of (M^k)^T M^k, scaled on the axis.
  RatMatrix G(5, 5);
  IntMatrix P = IntMatrix::identity(5);
  for (int k = 0; k < 5; ++k) {
    G = G + to_rational(P.transpose() * P);
    P = M * P;
  }
  G = sq(p.a) * G;
  G(4, 4) = sq(p.c);
  return make(G, {elem(M, {0, 0, 0, 0, Rational(1, 5)})}, {{1, 1, 1, 1, 1}});
}

}  // namespace

const char* style_name(LatticeStyle s) {
  switch (s) {
    case S::Generic: return "generic";
    case S::Square: return "square";
    case S::Hexagonal: return "hexagonal";
  }
  return "?";
}

std::optional<LatticeStyle> parse_style(const std::string& s) {
  for (S x : {S::Generic, S::Square, S::Hexagonal})
    if (s == style_name(x)) return x;
  return std::nullopt;
}

const std::vector<CatalogEntry>& catalog_entries() { return entries_table(); }

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : entries_table())
    if (e.name == name) return e;
  fail(ErrorCode::UnknownEntry, "unknown catalog entry '" + name + "'");
}

SpaceGroup build_group(const std::string& name, const CatalogParams& params) {
  const CatalogEntry& entry = catalog_entry(name);
  if (entry.band) fail(ErrorCode::UnknownEntry, name + " is a band, not a closed manifold");
  check_params(params);
  CatalogParams p = params;
  p.style = resolve_style(entry, params.style);
  const Rational h(1, 2);

  if (name == "T2") return make(planar_form(p, {}), {}, {});
  if (name == "K2") return klein(p, false);
  if (name == "T3") return make(planar_form(p, {sq(p.c)}), {}, {});
  if (name == "C2") return make(planar_form(p, {sq(p.c)}), {elem(diag({-1, -1, 1}), {0, 0, h})}, {{1, 1}});
  if (name == "C3")
    return make(planar_form(p, {sq(p.c)}), {elem({{0, -1, 0}, {1, -1, 0}, {0, 0, 1}}, {0, 0, Rational(1, 3)})},
                {{1, 1, 1}});
  if (name == "C4")
    return make(planar_form(p, {sq(p.c)}), {elem({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}, {0, 0, Rational(1, 4)})},
                {{1, 1, 1, 1}});
  if (name == "C6")
    return make(planar_form(p, {sq(p.c)}), {elem({{1, -1, 0}, {1, 0, 0}, {0, 0, 1}}, {0, 0, Rational(1, 6)})},
                {{1, 1, 1, 1, 1, 1}});
  if (name == "C22")
    return make(planar_form(p, {sq(p.c)}),
                {elem(diag({1, -1, -1}), {h, h, 0}), elem(diag({-1, 1, -1}), {0, h, h}),
                 elem(diag({-1, -1, 1}), {h, 0, h})},
                {{1, 1}, {2, 2}, {3, 3}, {1, 2, -1, -2}, {1, 2, -3}});
  if (name == "B1") return make(planar_form(p, {sq(p.c)}), {elem(diag({-1, 1, 1}), {0, 0, h})}, {{1, 1}});
  if (name == "B2") {
    // Lattice a1, a2 and the half-offset vector a3 = (a1 + a2)/2 + 2 delta e3, delta = c/2.
    RatMatrix G = planar_form(p, {0});
    const Rational delta = p.c / 2;
    G(0, 2) = G(2, 0) = (G(0, 0) + G(0, 1)) / 2;
    G(1, 2) = G(2, 1) = (G(1, 1) + G(0, 1)) / 2;
    G(2, 2) = (G(0, 0) + G(1, 1) + 2 * G(0, 1)) / 4 + 4 * sq(delta);
    return make(G, {elem({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}, {h, 0, 0})}, {{1, 1}});
  }
  if (name == "B3" || name == "B4")
    return make(planar_form(p, {sq(p.c)}),
                {elem(diag({1, 1, -1}), {h, 0, 0}), elem(diag({-1, 1, -1}), {0, h, name == "B4" ? h : Rational(0)})},
                z2_power_relators(2));
  if (name.rfind("HW", 0) == 0) {
    const HwRow& r = kHantzscheWendt[std::stoi(name.substr(2)) - 1];
    return make(rdiag({sq(p.a), sq(p.b), sq(p.c), sq(p.d)}),
                {hw_generator(r.t1, r.s1), hw_generator(r.t2, r.s2), hw_generator(r.t3, r.s3)}, z2_power_relators(3));
  }
  if (name == "C3xS1")
    return make(planar_form(p, {sq(p.c), sq(p.d)}),
                {elem({{0, -1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, {0, 0, Rational(1, 3), 0})},
                {{1, 1, 1}});
  if (name == "C5") return c5_group(p);
  fail(ErrorCode::UnknownEntry, "unknown catalog entry '" + name + "'");
}

FlatBand build_band(const std::string& name, const CatalogParams& params) {
  const CatalogEntry& entry = catalog_entry(name);
  if (!entry.band) fail(ErrorCode::UnknownEntry, name + " is a closed manifold, not a band");
  check_params(params);
  CatalogParams p = params;
  p.style = resolve_style(entry, params.style);

  if (name == "MB") return make_band(make(rdiag({sq(p.a)}), {}, {}), {{}, {-1}}, p.d);
  // The soul of TT has the half vector v'/2 as a lattice vector; the flip is -1 on it.
  if (name == "TT") return make_band(make(rdiag({sq(p.a), sq(p.b) / 4}), {}, {}), {{}, {1, -1}}, p.d);
  if (name == "TTr") return make_band(make(rdiag({sq(p.a) / 4, sq(p.b)}), {}, {}), {{}, {-1, 1}}, p.d);
  if (name == "TK") return make_band(klein(p, false), {{-1}, {1, 1}}, p.d);
  if (name == "TKr") return make_band(klein(p, true), {{-1}, {1, 1}}, p.d);
  if (name == "KK") return make_band(klein(p, false), {{1}, {1, -1}}, p.d);
  fail(ErrorCode::UnknownEntry, "unknown catalog entry '" + name + "'");
}

std::vector<std::string> identify(const Fingerprint& target, bool include_test_entries) {
  // Fingerprints of every closed entry in every style, computed once.
  static const std::vector<std::pair<const CatalogEntry*, Fingerprint>> table = [] {
    std::vector<std::pair<const CatalogEntry*, Fingerprint>> t;
    for (const auto& e : entries_table()) {
      if (e.band) continue;
      for (S style : e.styles) {
        CatalogParams p;
        p.style = style;
        t.emplace_back(&e, fingerprint(build_group(e.name, p)));
      }
    }
    return t;
  }();
  std::vector<std::string> out;
  for (const auto& [e, f] : table) {
    if (e->test_only && !include_test_entries) continue;
    if (f == target && (out.empty() || out.back() != e->name)) out.push_back(e->name);
  }
  return out;
}

std::vector<std::string> identify(const SpaceGroup& sg, bool include_test_entries) {
  return identify(fingerprint(sg), include_test_entries);
}

}  // namespace flatbound
