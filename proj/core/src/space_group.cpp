#include "flatbound/space_group.hpp"

#include <map>
#include <sstream>

#include "flatbound/linalg.hpp"

namespace flatbound {

AffineElement AffineElement::identity(std::size_t dim) { return {IntMatrix::identity(dim), RatVector(dim)}; }

AffineElement AffineElement::pure_translation(RatVector t) {
  const std::size_t n = t.size();
  return {IntMatrix::identity(n), std::move(t)};
}

AffineElement AffineElement::operator*(const AffineElement& rhs) const {
  return {linear * rhs.linear, linear * rhs.translation + translation};
}

AffineElement AffineElement::inverse() const {
  const IntMatrix inv = unimodular_inverse(linear);
  return {inv, -(inv * translation)};
}

RatVector AffineElement::apply(const RatVector& x) const { return linear * x + translation; }

std::string to_string(const AffineElement& e) { return "(" + to_string(e.linear) + ", " + to_string(e.translation) + ")"; }

std::optional<std::size_t> matrix_order(const IntMatrix& M, std::size_t max_order) {
  if (!M.square()) return std::nullopt;
  IntMatrix P = M;
  for (std::size_t k = 1; k <= max_order; ++k) {
    if (P.is_identity()) return k;
    P = P * M;
  }
  return std::nullopt;
}

IntMatrix orbit_sum(const IntMatrix& M) {
  const auto m = matrix_order(M);
  if (!m) fail(ErrorCode::InfiniteOrder, "linear part has no finite order: " + to_string(M));
  IntMatrix N(M.rows(), M.cols()), P = IntMatrix::identity(M.rows());
  for (std::size_t k = 0; k < *m; ++k) {
    N = N + P;
    P = P * M;
  }
  return N;
}

std::optional<RatVector> fixed_point_of(const AffineElement& e) {
  if (!matrix_order(e.linear)) fail(ErrorCode::InfiniteOrder, "linear part has no finite order");
  const std::size_t n = e.dim();
  // Solve (M - I) x = -v over Q by elimination on the augmented matrix.
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(e.linear(i, j) - (i == j ? 1 : 0));
    aug(i, n) = -e.translation[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j <= n; ++j) std::swap(aug(p, j), aug(r, j));
    const Rational piv = aug(r, c);
    for (std::size_t j = 0; j <= n; ++j) aug(r, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      const Rational q = aug(i, c);
      for (std::size_t j = 0; j <= n; ++j) aug(i, j) -= q * aug(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (aug(i, n) != 0) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = aug(i, n);
  return x;
}

bool has_fixed_point_by_orbit_sum(const AffineElement& e) {
  const IntMatrix N = orbit_sum(e.linear);
  for (const auto& c : N * e.translation)
    if (c != 0) return false;
  return true;
}

std::optional<std::size_t> PointGroup::index_of(const IntMatrix& M) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == M) return i;
  return std::nullopt;
}

bool PointGroup::is_abelian() const {
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = i + 1; j < order(); ++j)
      if (table[i][j] != table[j][i]) return false;
  return true;
}

std::size_t PointGroup::element_order(std::size_t i) const {
  std::size_t k = 1, p = i;
  while (p != 0) p = table[p][i], ++k;
  return k;
}

PointGroup close_point_group(const std::vector<IntMatrix>& generators, std::size_t dim, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim) fail(ErrorCode::DimensionMismatch, "point generator shape");
    const Integer d = determinant(g);
    if (d != 1 && d != -1) fail(ErrorCode::InvalidArgument, "point generator is not unimodular: " + to_string(g));
  }
  PointGroup pg;
  std::map<IntMatrix, std::size_t> index;
  pg.elements.push_back(IntMatrix::identity(dim));
  pg.parent.push_back(0);
  pg.via.push_back(0);
  index.emplace(pg.elements[0], 0);
  for (std::size_t head = 0; head < pg.elements.size(); ++head) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      IntMatrix h = generators[g] * pg.elements[head];
      if (index.count(h)) continue;
      if (pg.elements.size() >= cap) fail(ErrorCode::CapExceeded, "point group exceeds " + std::to_string(cap) + " elements");
      index.emplace(h, pg.elements.size());
      pg.elements.push_back(std::move(h));
      pg.parent.push_back(head);
      pg.via.push_back(g);
    }
  }
  const std::size_t n = pg.elements.size();
  pg.table.assign(n, std::vector<std::size_t>(n));
  pg.inverse.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      pg.table[i][j] = index.at(pg.elements[i] * pg.elements[j]);
      if (pg.table[i][j] == 0) pg.inverse[i] = j;
    }
  return pg;
}

const char* diagnostic_kind_name(Diagnostic::Kind k) {
  switch (k) {
    case Diagnostic::Kind::InfinitePointGroup: return "point-group-not-finite";
    case Diagnostic::Kind::NonUnimodular: return "linear-part-not-unimodular";
    case Diagnostic::Kind::CocycleViolation: return "cocycle-violation";
    case Diagnostic::Kind::FormNotPreserved: return "form-not-preserved";
    case Diagnostic::Kind::BadRelator: return "relator-not-a-lattice-translation";
  }
  return "unknown";
}

SpaceGroup::SpaceGroup(QuadraticForm form, std::vector<AffineElement> generators,
                       std::optional<std::vector<Word>> relators, std::size_t cap)
    : form_(std::move(form)), generators_(std::move(generators)), relators_(std::move(relators)) {
  const std::size_t n = form_.dim();
  using Kind = Diagnostic::Kind;
  bool shapes_ok = true;
  std::vector<IntMatrix> linears;
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const auto& e = generators_[g];
    if (e.linear.rows() != n || e.linear.cols() != n || e.translation.size() != n)
      fail(ErrorCode::DimensionMismatch, "generator " + std::to_string(g + 1) + " has the wrong dimension");
    const Integer d = determinant(e.linear);
    if (d != 1 && d != -1) {
      diagnostics_.push_back({Kind::NonUnimodular, "generator " + std::to_string(g + 1) + " has determinant " + d.get_str()});
      shapes_ok = false;
    }
    if (!form_.preserved_by(e.linear))
      diagnostics_.push_back({Kind::FormNotPreserved, "generator " + std::to_string(g + 1) + " does not preserve the Gram form"});
    linears.push_back(e.linear);
  }
  if (!shapes_ok) return;
  try {
    point_group_ = close_point_group(linears, n, cap);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::CapExceeded) throw;
    diagnostics_.push_back({Kind::InfinitePointGroup, err.what()});
    return;
  }
  const PointGroup& pg = *point_group_;
  vectors_.assign(pg.order(), RatVector(n));
  for (std::size_t i = 1; i < pg.order(); ++i) {
    const auto& g = generators_[pg.via[i]];
    vectors_[i] = frac(g.linear * vectors_[pg.parent[i]] + g.translation);
  }
  // A generator sharing its linear part with an earlier lift must agree modulo Z^n.
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const std::size_t i = *pg.index_of(generators_[g].linear);
    if (frac(generators_[g].translation) != vectors_[i])
      diagnostics_.push_back({Kind::CocycleViolation, "generator " + std::to_string(g + 1) +
                                                          " differs from the lift of its linear part by a non-lattice translation"});
  }
  for (std::size_t i = 0; i < pg.order(); ++i)
    for (std::size_t j = 0; j < pg.order(); ++j) {
      const RatVector w = frac(pg.elements[i] * vectors_[j] + vectors_[i]);
      if (w != vectors_[pg.table[i][j]]) {
        diagnostics_.push_back({Kind::CocycleViolation, "v(MN) != M v(N) + v(M) mod Z^n for elements " + std::to_string(i) +
                                                            ", " + std::to_string(j)});
        i = j = pg.order();
      }
    }
  if (relators_) {
    for (std::size_t r = 0; r < relators_->size(); ++r) {
      const Word& w = (*relators_)[r];
      bool ok = true;
      for (int letter : w)
        if (letter == 0 || static_cast<std::size_t>(letter < 0 ? -letter : letter) > generators_.size()) ok = false;
      if (ok) {
        const AffineElement e = evaluate(w);
        ok = e.linear.is_identity() && is_integral(e.translation);
      }
      if (!ok) diagnostics_.push_back({Kind::BadRelator, "relator " + std::to_string(r + 1) + " is not a lattice translation"});
    }
  }
}

void SpaceGroup::require_valid() const {
  if (valid()) return;
  std::string msg = "invalid space group:";
  for (const auto& d : diagnostics_) msg += std::string(" [") + diagnostic_kind_name(d.kind) + "] " + d.message + ";";
  fail(ErrorCode::NotCrystallographic, msg);
}

const PointGroup& SpaceGroup::point_group() const {
  if (!point_group_) require_valid();
  return *point_group_;
}

AffineElement SpaceGroup::lift(std::size_t i) const { return {point_group().elements.at(i), vectors_.at(i)}; }

IntVector SpaceGroup::cocycle(std::size_t i, std::size_t j) const {
  const PointGroup& pg = point_group();
  return to_integer(vectors_[i] + pg.elements[i] * vectors_[j] - vectors_[pg.table[i][j]]);
}

bool SpaceGroup::contains(const AffineElement& e) const {
  const auto i = point_group().index_of(e.linear);
  return i && frac(e.translation) == vectors_[*i];
}

AffineElement SpaceGroup::evaluate(const Word& w) const {
  AffineElement e = AffineElement::identity(dim());
  for (int letter : w) {
    const std::size_t g = static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1;
    e = e * (letter < 0 ? generators_.at(g).inverse() : generators_.at(g));
  }
  return e;
}

std::vector<Diagnostic> validate(const SpaceGroup& sg) { return sg.diagnostics(); }

namespace {

// Rational lattice (1/den) * rowspan(rows), kept in Hermite form.
struct RationalLattice {
  std::size_t dim;
  Integer den = 1;
  IntMatrix rows;

  explicit RationalLattice(std::size_t n) : dim(n), rows(0, n) {}

  bool contains(const RatVector& x) const {
    if (rows.rows() == 0) {
      for (const auto& c : x)
        if (c != 0) return false;
      return true;
    }
    return integer_solvable(rows.transpose(), Rational(den) * x);
  }

  void add(const RatVector& x) {
    const Integer d = lcm(den, common_denominator(x));
    IntMatrix g(rows.rows() + 1, dim);
    const Integer scale = d / den;
    for (std::size_t i = 0; i < rows.rows(); ++i)
      for (std::size_t j = 0; j < dim; ++j) g(i, j) = rows(i, j) * scale;
    for (std::size_t j = 0; j < dim; ++j) g(rows.rows(), j) = Rational(Rational(d) * x[j]).get_num();
    rows = hermite_row_basis(g);
    den = d;
  }

  // Columns are the basis vectors.
  RatMatrix basis() const {
    RatMatrix B(dim, rows.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i)
      for (std::size_t j = 0; j < dim; ++j) B(j, i) = ratio(rows(i, j), den);
    return B;
  }
};

}  // namespace

Rebased standard_form(const QuadraticForm& form, const std::vector<AffineElement>& generators,
                      const std::vector<RatVector>& translations, std::size_t cap) {
  const std::size_t n = form.dim();
  std::vector<IntMatrix> linears;
  for (const auto& g : generators) linears.push_back(g.linear);
  const PointGroup pg = close_point_group(linears, n, cap);

  RationalLattice L(n);
  for (const auto& t : translations)
    if (!L.contains(t)) L.add(t);

  // Exact representatives realized by the BFS words (not reduced: L need not contain Z^n yet).
  std::vector<RatVector> reps(pg.order(), RatVector(n));
  for (std::size_t i = 1; i < pg.order(); ++i) {
    const auto& g = generators[pg.via[i]];
    reps[i] = g.linear * reps[pg.parent[i]] + g.translation;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const RatMatrix B = L.basis();
      for (std::size_t k = 0; k < B.cols(); ++k) {
        const RatVector image = generators[g].linear * B.column(k);
        if (!L.contains(image)) L.add(image), changed = true;
      }
      for (std::size_t i = 0; i < pg.order(); ++i) {
        const std::size_t j = pg.table[*pg.index_of(generators[g].linear)][i];
        const RatVector diff = generators[g].linear * reps[i] + generators[g].translation - reps[j];
        if (!L.contains(diff)) L.add(diff), changed = true;
      }
    }
  }
  if (L.rows.rows() != n) fail(ErrorCode::NotCrystallographic, "translation subgroup does not have full rank");

  const RatMatrix B = L.basis();
  const RatMatrix Binv = inverse(B);
  std::vector<AffineElement> rebased;
  for (const auto& g : generators) {
    const RatMatrix M = Binv * to_rational(g.linear) * B;
    if (!is_integral(M)) fail(ErrorCode::NotCrystallographic, "lattice is not invariant under the point group");
    AffineElement e{to_integer(M), frac(Binv * g.translation)};
    if (e.linear.is_identity()) continue;
    bool dup = false;
    for (const auto& r : rebased) dup = dup || r == e;
    if (!dup) rebased.push_back(std::move(e));
  }
  SpaceGroup sg(form.rebased(B), std::move(rebased), std::nullopt, cap);
  sg.require_valid();
  return {std::move(sg), B};
}

SpaceGroup change_basis(const SpaceGroup& sg, const IntMatrix& U) {
  const IntMatrix Uinv = unimodular_inverse(U);
  std::vector<AffineElement> gens;
  for (const auto& g : sg.generators()) gens.push_back({Uinv * g.linear * U, Uinv * g.translation});
  return SpaceGroup(sg.form().rebased(to_rational(U)), std::move(gens), sg.relators());
}

SpaceGroup conjugate(const SpaceGroup& sg, const AffineElement& c) {
  const AffineElement ci = c.inverse();
  std::vector<AffineElement> gens;
  for (const auto& g : sg.generators()) gens.push_back(c * g * ci);
  return SpaceGroup(sg.form().rebased(to_rational(unimodular_inverse(c.linear))), std::move(gens), sg.relators());
}

}  // namespace flatbound
