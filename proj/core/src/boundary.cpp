#include "flatbound/boundary.hpp"

#include <map>
#include <set>

namespace flatbound {

namespace {

RatMatrix stack(const std::vector<IntMatrix>& blocks, std::size_t n) {
  RatMatrix out(blocks.size() * n, n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(b * n + i, j) = Rational(blocks[b](i, j));
  return out;
}

// Torsion locus of the coset element g * lift(M): t with N (t + A v_M) in N Z^n.
struct Locus {
  std::size_t element;
  IntMatrix N;
  RatVector offset;  // A v_M
  std::vector<IntVector> kernel;

  bool contains(const RatVector& t) const { return integer_solvable(N, N * (t + offset)); }

  bool covers(const RatVector& point, const std::vector<IntVector>& directions) const {
    for (const auto& w : directions) {
      const IntVector Nw = N * w;
      for (const auto& x : Nw)
        if (x != 0) return false;
    }
    return contains(point);
  }
};

std::vector<Locus> loci(const SpaceGroup& sg, const IntMatrix& A) {
  const PointGroup& pg = sg.point_group();
  std::vector<Locus> out;
  for (std::size_t k = 0; k < pg.order(); ++k) {
    Locus l{k, orbit_sum(A * pg.elements[k]), A * sg.vector(k), {}};
    l.kernel = rational_kernel(l.N);
    out.push_back(std::move(l));
  }
  return out;
}

// Grid points t = frac(point + sum c_i w_i), c_i in (1/q)Z, for q = 2, 4, 6, ...,
// tried in lexicographic order of t within each q.
std::optional<RatVector> scan_family(const RatVector& point, const std::vector<IntVector>& directions,
                                     const std::vector<Locus>& ls, std::size_t max_denominator) {
  auto free_of_torsion = [&](const RatVector& t) {
    for (const auto& l : ls)
      if (l.contains(t)) return false;
    return true;
  };
  if (directions.empty()) return free_of_torsion(point) ? std::optional<RatVector>(point) : std::nullopt;

  std::set<RatVector> tried;
  for (std::size_t q = 2;; q += 2) {
    if (max_denominator && q > max_denominator)
      fail(ErrorCode::CapExceeded, "witness scan exceeded denominator " + std::to_string(max_denominator));
    std::set<RatVector> grid;
    std::vector<std::size_t> c(directions.size(), 0);
    for (;;) {
      RatVector t = point;
      for (std::size_t i = 0; i < directions.size(); ++i)
        t = t + ratio(c[i], q) * to_rational(directions[i]);
      grid.insert(frac(t));
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == q) c[i++] = 0;
      if (i == c.size()) break;
    }
    for (const auto& t : grid)
      if (tried.insert(t).second && free_of_torsion(t)) return t;
  }
}

bool normalizes_point_group(const PointGroup& pg, const std::vector<AffineElement>& gens, const IntMatrix& A) {
  const IntMatrix Ainv = unimodular_inverse(A);
  for (const auto& g : gens)
    if (!pg.contains(A * g.linear * Ainv)) return false;
  return pg.contains(A * A);
}

}  // namespace

bool CandidateRecord::refuted() const {
  if (!consistent) return true;
  for (const auto& f : families)
    if (!f.blocking) return false;
  return true;
}

std::vector<IntMatrix> linear_candidates(const SpaceGroup& sg, std::size_t cap) {
  sg.require_valid();
  std::vector<IntMatrix> out;
  for (auto& A : form_isometries(sg.form(), cap))
    if (normalizes_point_group(sg.point_group(), sg.generators(), A)) out.push_back(std::move(A));
  return out;
}

std::optional<CongruenceSolution> translation_constraints(const SpaceGroup& sg, const IntMatrix& A) {
  const std::size_t n = sg.dim();
  const PointGroup& pg = sg.point_group();
  const IntMatrix I = IntMatrix::identity(n), Ainv = unimodular_inverse(A);
  const auto square = pg.index_of(A * A);
  if (!square) fail(ErrorCode::InvalidArgument, "A^2 is not in the point group");

  std::vector<IntMatrix> blocks{I + A};
  RatVector rhs = sg.vector(*square);
  for (const auto& g : sg.generators()) {
    const IntMatrix C = A * g.linear * Ainv;
    const auto c = pg.index_of(C);
    if (!c) fail(ErrorCode::InvalidArgument, "A does not normalize the point group");
    blocks.push_back(I - C);
    const RatVector r = sg.vector(*c) - A * g.translation;
    rhs.insert(rhs.end(), r.begin(), r.end());
  }
  return solve_affine_congruence(stack(blocks, n), rhs);
}

AdmissibilityReport decide_admissible(const SpaceGroup& sg, const DecideOptions& options) {
  if (!is_bieberbach(sg)) fail(ErrorCode::NotBieberbach, "decide_admissible needs a Bieberbach group");
  AdmissibilityReport report;
  for (const IntMatrix& A : linear_candidates(sg, options.cap)) {
    CandidateRecord rec;
    rec.linear = A;
    const auto sol = translation_constraints(sg, A);
    rec.consistent = sol.has_value();
    if (sol) {
      const std::vector<Locus> ls = loci(sg, A);
      auto points = sol->residues();
      std::sort(points.begin(), points.end());
      for (auto& p : points) {
        FamilyRecord fam{std::move(p), sol->directions, std::nullopt, std::nullopt};
        for (const auto& l : ls)
          if (l.covers(fam.point, fam.directions)) {
            fam.blocking = l.element;
            break;
          }
        if (!fam.blocking) {
          const auto t = scan_family(fam.point, fam.directions, ls, options.max_denominator);
          if (!t) fail(ErrorCode::InvalidArgument, "internal: uncovered family without a witness");
          const AffineElement g{A, *t};
          Rebased ext = extend_by_involution(sg, g);
          if (!is_bieberbach(ext.group))
            fail(ErrorCode::NotBieberbach, "internal: witness " + to_string(g) + " fails re-verification");
          fam.witness = report.witnesses.size();
          Fingerprint fp = fingerprint(ext.group);
          report.witnesses.push_back({report.candidates.size(), g, std::move(ext.group), std::move(fp)});
        }
        rec.families.push_back(std::move(fam));
      }
    }
    report.candidates.push_back(std::move(rec));
  }
  report.boundary = !report.witnesses.empty();
  return report;
}

bool verify_admissible(const SpaceGroup& sg, const AffineElement& g) {
  try {
    return is_bieberbach(extend_by_involution(sg, g).group);
  } catch (const Error&) {
    return false;
  }
}

AffineElement construct_odd_cyclic_involution(const SpaceGroup& sg) {
  sg.require_valid();
  const PointGroup& pg = sg.point_group();
  const std::size_t N = pg.order();
  std::vector<std::size_t> generators;
  for (std::size_t i = 0; i < N; ++i)
    if (pg.element_order(i) == N) generators.push_back(i);
  if (N < 3 || N % 2 == 0 || generators.empty())
    fail(ErrorCode::HolonomyNotOddCyclic, "holonomy is not cyclic of odd order");

  const std::size_t n = sg.dim();
  for (std::size_t i : generators) {
    // gamma^N = (I, (1 + M + ... + M^(N-1)) v).
    const AffineElement gamma = sg.lift(i);
    AffineElement p = AffineElement::identity(n);
    for (std::size_t k = 0; k < N; ++k) p = gamma * p;
    const AffineElement g = AffineElement::pure_translation(Rational(1, 2) * p.translation);
    if (verify_admissible(sg, g)) return g;
  }
  fail(ErrorCode::NotBieberbach, "internal: no lift of a holonomy generator gives an admissible half-translation");
}

const char* z2_case_name(Z2Case c) {
  switch (c) {
    case Z2Case::Line: return "line";
    case Z2Case::SingleClass: return "single-class";
    case Z2Case::TwoClass: return "two-class";
  }
  return "?";
}

Z2Involution construct_z2_involution(const SpaceGroup& sg) {
  sg.require_valid();
  const PointGroup& pg = sg.point_group();
  if (pg.order() != 2) fail(ErrorCode::HolonomyNotZ2, "holonomy is not of order 2");
  const std::size_t n = sg.dim();
  const IntMatrix& M = pg.elements[1];
  const IntMatrix I = IntMatrix::identity(n);

  // Lattice vectors negated by M; half of a primitive one goes to the quotient freely.
  const auto minus = solve_integer_system(M + I, IntVector(n));
  const auto plus = solve_integer_system(M - I, IntVector(n));
  const IntVector& b = minus->kernel.front();
  const AffineElement g = AffineElement::pure_translation(Rational(1, 2) * to_rational(b));
  if (!verify_admissible(sg, g)) fail(ErrorCode::NotBieberbach, "internal: half-translation is not admissible");

  Z2Case kind = Z2Case::Line;
  if (plus->kernel.size() > 1) {
    // Does the lattice split as (L cap E+) + (L cap E-)?
    std::vector<IntVector> cols = plus->kernel;
    cols.insert(cols.end(), minus->kernel.begin(), minus->kernel.end());
    const Integer det = determinant(IntMatrix::from_columns(cols, n));
    kind = (det == 1 || det == -1) ? Z2Case::SingleClass : Z2Case::TwoClass;
  }
  return {g, kind};
}

std::vector<SoulPair> boundary_soul_pairs(const std::vector<NamedGroup>& boundaries, const DecideOptions& options) {
  std::vector<SoulPair> out;
  std::set<std::pair<Fingerprint, Fingerprint>> seen;
  for (const auto& b : boundaries) {
    const Fingerprint fb = fingerprint(b.group);
    const AdmissibilityReport rep = decide_admissible(b.group, options);
    for (const auto& w : rep.witnesses)
      if (seen.emplace(fb, w.soul_fingerprint).second) out.push_back({fb, w.soul_fingerprint, b.label, w.element});
  }
  return out;
}

}  // namespace flatbound
