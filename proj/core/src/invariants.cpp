#include "flatbound/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "flatbound/linalg.hpp"
#include "flatbound/subgroups.hpp"

namespace flatbound {

std::optional<TorsionWitness> torsion_witness(const SpaceGroup& sg) {
  sg.require_valid();
  const PointGroup& pg = sg.point_group();
  for (std::size_t i = 1; i < pg.order(); ++i) {
    // (M, v + z) is torsion iff N (v + z) == 0 for some integer z.
    const IntMatrix N = orbit_sum(pg.elements[i]);
    const RatVector rhs = -(N * sg.vector(i));
    if (!is_integral(rhs)) continue;
    if (auto sol = solve_integer_system(N, to_integer(rhs))) return TorsionWitness{i, sol->x0};
  }
  return std::nullopt;
}

bool is_bieberbach(const SpaceGroup& sg) { return sg.valid() && !torsion_witness(sg); }

bool is_orientable(const SpaceGroup& sg) {
  for (const auto& M : sg.point_group().elements)
    if (determinant(M) != 1) return false;
  return true;
}

std::size_t betti_one(const SpaceGroup& sg) {
  const std::size_t n = sg.dim();
  std::vector<IntVector> rows;
  for (const auto& g : sg.point_group().elements) {
    const IntMatrix D = g - IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(D.row(i));
  }
  if (rows.empty()) return n;
  return n - rank(to_rational(IntMatrix::from_rows(rows, n)));
}

HolonomyType holonomy_invariants(const SpaceGroup& sg) {
  const PointGroup& pg = sg.point_group();
  HolonomyType h;
  h.order = pg.order();
  h.abelian = pg.is_abelian();
  if (!h.abelian) return h;

  std::vector<std::size_t> orders(pg.order());
  for (std::size_t i = 0; i < pg.order(); ++i) orders[i] = pg.element_order(i);

  // For each prime p: #{g : ord(g) | p^k} = p^(sum_i min(k, e_i)).
  std::size_t rest = h.order;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    std::vector<std::size_t> at_least;  // at_least[k-1] = #{i : e_i >= k}
    std::size_t prev_log = 0;
    for (std::size_t pk = p;; pk *= p) {
      std::size_t count = 0;
      for (auto o : orders) count += (pk % o == 0);
      std::size_t lg = 0;
      for (std::size_t c = count; c > 1; c /= p) ++lg;
      if (lg == prev_log) break;
      at_least.push_back(lg - prev_log);
      prev_log = lg;
    }
    for (std::size_t k = 1; k <= at_least.size(); ++k) {
      const std::size_t mult = at_least[k - 1] - (k < at_least.size() ? at_least[k] : 0);
      Integer q = 1;
      for (std::size_t e = 0; e < k; ++e) q *= static_cast<unsigned long>(p);
      for (std::size_t m = 0; m < mult; ++m) h.invariants.push_back(q);
    }
  }
  std::sort(h.invariants.begin(), h.invariants.end());
  return h;
}

std::string to_string(const AbelianGroup& a) {
  std::ostringstream os;
  bool first = true;
  if (a.rank > 0) os << "Z^" << a.rank, first = false;
  for (const auto& t : a.torsion) os << (first ? "" : " + ") << "Z/" << t.get_str(), first = false;
  if (first) os << "0";
  return os.str();
}

AbelianGroup abelian_quotient(const IntMatrix& relations, std::size_t generators) {
  AbelianGroup a;
  if (relations.rows() == 0) {
    a.rank = generators;
    return a;
  }
  const SmithForm f = smith_normal_form(relations);
  a.rank = generators - f.rank;
  for (const auto& s : f.invariant_factors())
    if (s != 1) a.torsion.push_back(s);
  return a;
}

namespace {

void add_conjugation_rows(const IntMatrix& M, std::size_t width, std::vector<IntVector>& rows) {
  const std::size_t n = M.rows();
  for (std::size_t j = 0; j < n; ++j) {
    IntVector r(width);
    for (std::size_t i = 0; i < n; ++i) r[i] = M(i, j) - (i == j ? 1 : 0);
    rows.push_back(std::move(r));
  }
}

}  // namespace

AbelianGroup first_homology(const SpaceGroup& sg) {
  if (!sg.relators()) fail(ErrorCode::MissingPresentation, "group has no point-group presentation");
  const std::size_t n = sg.dim(), k = sg.generators().size(), width = n + k;
  std::vector<IntVector> rows;
  for (const auto& g : sg.generators()) add_conjugation_rows(g.linear, width, rows);
  for (const Word& w : *sg.relators()) {
    for (int letter : w)
      if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > k)
        fail(ErrorCode::NonIntegralRelator, "relator references an unknown generator");
    const AffineElement e = sg.evaluate(w);
    if (!e.linear.is_identity() || !is_integral(e.translation))
      fail(ErrorCode::NonIntegralRelator, "relator does not evaluate to a lattice translation");
    IntVector r(width);
    const IntVector t = to_integer(e.translation);
    for (std::size_t i = 0; i < n; ++i) r[i] = -t[i];
    for (int letter : w) r[n + std::abs(letter) - 1] += letter > 0 ? 1 : -1;
    rows.push_back(std::move(r));
  }
  return abelian_quotient(IntMatrix::from_rows(rows, width), width);
}

AbelianGroup abelianization(const SpaceGroup& sg) {
  const PointGroup& pg = sg.point_group();
  const std::size_t n = sg.dim(), m = pg.order(), width = n + m;
  std::vector<IntVector> rows;
  for (const auto& M : pg.elements) add_conjugation_rows(M, width, rows);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      // lift_i * lift_j = t_c * lift_ij
      IntVector r(width);
      const IntVector c = sg.cocycle(i, j);
      for (std::size_t a = 0; a < n; ++a) r[a] = -c[a];
      r[n + i] += 1;
      r[n + j] += 1;
      r[n + pg.table[i][j]] -= 1;
      rows.push_back(std::move(r));
    }
  return abelian_quotient(IntMatrix::from_rows(rows, width), width);
}

ElementClass element_class(const SpaceGroup& sg, std::size_t i) {
  const IntMatrix& M = sg.point_group().elements.at(i);
  const std::size_t n = sg.dim();
  const IntMatrix D = M - IntMatrix::identity(n);
  ElementClass c{determinant(M) == 1 ? 1 : -1, n - rank(to_rational(D)), 1};
  // x in Z^n + Im(D)  iff  C x in C Z^n, with the rows of C spanning the annihilator of Im(D).
  const auto annihilator = rational_kernel(D.transpose());
  if (annihilator.empty()) return c;
  const IntMatrix C = IntMatrix::from_rows(annihilator, n);
  const RatVector& v = sg.vector(i);
  const Integer bound = common_denominator(v);
  for (Integer k = 1; k <= bound; ++k)
    if (integer_solvable(C, C * (Rational(k) * v))) {
      c.vector_order = k;
      return c;
    }
  return c;  // unreachable: bound * v is integral
}

Fingerprint fingerprint(const SpaceGroup& sg, std::size_t depth) {
  sg.require_valid();
  Fingerprint f;
  f.dim = sg.dim();
  f.orientable = is_orientable(sg);
  f.betti1 = betti_one(sg);
  f.holonomy = holonomy_invariants(sg);
  f.h1 = abelianization(sg);
  for (std::size_t i = 0; i < sg.point_group().order(); ++i) f.classes.push_back(element_class(sg, i));
  std::sort(f.classes.begin(), f.classes.end());
  if (depth > 0) {
    for (const auto& s : sign_homomorphisms(sg))
      f.subgroups.push_back(fingerprint(index_two_subgroup(sg, s).group, depth - 1));
    std::sort(f.subgroups.begin(), f.subgroups.end());
  }
  return f;
}

std::weak_ordering operator<=>(const Fingerprint& a, const Fingerprint& b) {
  const auto head = [](const Fingerprint& f) { return std::tie(f.dim, f.orientable, f.betti1, f.holonomy, f.h1, f.classes); };
  if (auto c = head(a) <=> head(b); c != 0) return c;
  return std::lexicographical_compare_three_way(a.subgroups.begin(), a.subgroups.end(), b.subgroups.begin(),
                                                b.subgroups.end());
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream os;
  os << "dim=" << f.dim << " orientable=" << (f.orientable ? "yes" : "no") << " b1=" << f.betti1 << " holonomy=";
  if (f.holonomy.abelian) {
    os << "[";
    for (std::size_t i = 0; i < f.holonomy.invariants.size(); ++i) os << (i ? "," : "") << f.holonomy.invariants[i].get_str();
    os << "]";
  } else {
    os << "nonabelian(" << f.holonomy.order << ")";
  }
  os << " H1=" << to_string(f.h1);
  if (!f.subgroups.empty()) os << " index2=" << f.subgroups.size();
  return os.str();
}

}  // namespace flatbound
