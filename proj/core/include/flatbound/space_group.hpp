#pragma once

// Space groups in lattice coordinates.
//
// A SpaceGroup is stored as a Gram form on Z^n together with affine point
// generators (M, v): M is an integer matrix, v a rational translation. The
// group is generated by Z^n and the point generators; its translation lattice
// must be exactly Z^n ("standard form"), which validate() checks through the
// cocycle identity of the derived vector system.

#include <optional>
#include <string>
#include <vector>

#include "flatbound/matrix.hpp"
#include "flatbound/quadratic_form.hpp"

namespace flatbound {

// x -> linear * x + translation.  (M, a)(N, b) = (MN, M b + a).
struct AffineElement {
  IntMatrix linear;
  RatVector translation;

  static AffineElement identity(std::size_t dim);
  static AffineElement pure_translation(RatVector t);

  std::size_t dim() const { return translation.size(); }
  AffineElement operator*(const AffineElement& rhs) const;
  // Requires a unimodular linear part.
  AffineElement inverse() const;
  RatVector apply(const RatVector& x) const;

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.linear == b.linear && a.translation == b.translation;
  }
  friend bool operator<(const AffineElement& a, const AffineElement& b) {
    if (a.linear != b.linear) return a.linear < b.linear;
    return a.translation < b.translation;
  }
};

std::string to_string(const AffineElement& e);

// Order of a matrix, or nullopt if M^k != I for all k <= max_order.
std::optional<std::size_t> matrix_order(const IntMatrix& M, std::size_t max_order = 64);
// I + M + ... + M^(m-1) for m the order of M. Throws InfiniteOrder.
IntMatrix orbit_sum(const IntMatrix& M);

// A solution of (M - I) x = -v, if any. Throws InfiniteOrder when M has no finite order.
std::optional<RatVector> fixed_point_of(const AffineElement& e);
// Independent criterion: e has a fixed point iff N v == 0, N = orbit_sum(M).
bool has_fixed_point_by_orbit_sum(const AffineElement& e);

// Finite matrix group with multiplication table. Elements are ordered breadth
// first from the identity, trying generators in input order (left multiplication).
struct PointGroup {
  std::vector<IntMatrix> elements;
  std::vector<std::vector<std::size_t>> table;  // elements[i] * elements[j]
  std::vector<std::size_t> inverse;
  // elements[i] == generators[via[i]] * elements[parent[i]] for i > 0.
  std::vector<std::size_t> parent, via;

  std::size_t order() const { return elements.size(); }
  std::optional<std::size_t> index_of(const IntMatrix& M) const;
  bool contains(const IntMatrix& M) const { return index_of(M).has_value(); }
  bool is_abelian() const;
  std::size_t element_order(std::size_t i) const;
};

PointGroup close_point_group(const std::vector<IntMatrix>& generators, std::size_t dim, std::size_t cap = 1152);

// Relator words: nonzero 1-based generator indices, negative for inverses.
using Word = std::vector<int>;

struct Diagnostic {
  enum class Kind { InfinitePointGroup, NonUnimodular, CocycleViolation, FormNotPreserved, BadRelator };
  Kind kind;
  std::string message;
};

const char* diagnostic_kind_name(Diagnostic::Kind k);

class SpaceGroup {
public:
  SpaceGroup(QuadraticForm form, std::vector<AffineElement> generators,
             std::optional<std::vector<Word>> relators = std::nullopt, std::size_t cap = 1152);

  std::size_t dim() const { return form_.dim(); }
  const QuadraticForm& form() const { return form_; }
  const std::vector<AffineElement>& generators() const { return generators_; }
  const std::optional<std::vector<Word>>& relators() const { return relators_; }

  // Empty when the group is valid; see validate().
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
  bool valid() const { return diagnostics_.empty(); }
  // Throws NotCrystallographic listing the diagnostics.
  void require_valid() const;

  const PointGroup& point_group() const;
  // Canonical translation part of the lift of point_group().elements[i], in [0,1)^n.
  const RatVector& vector(std::size_t i) const { return vectors_.at(i); }
  AffineElement lift(std::size_t i) const;
  // v(i) + M_i v(j) - v(ij): the integral lattice correction of a product of lifts.
  IntVector cocycle(std::size_t i, std::size_t j) const;

  bool contains(const AffineElement& e) const;
  // Product of generators along a word (the actual generators, not canonical lifts).
  AffineElement evaluate(const Word& w) const;

private:
  QuadraticForm form_;
  std::vector<AffineElement> generators_;
  std::optional<std::vector<Word>> relators_;
  std::optional<PointGroup> point_group_;
  std::vector<RatVector> vectors_;
  std::vector<Diagnostic> diagnostics_;
};

std::vector<Diagnostic> validate(const SpaceGroup& sg);

// A crystallographic group rewritten on a basis of its own translation lattice.
// basis has the new lattice basis as columns, in the old coordinates.
struct Rebased {
  SpaceGroup group;
  RatMatrix basis;
};

// Normal form of the group generated by `generators` and `translations`
// (vectors already known to be translations of the group). The translation
// subgroup is computed exactly (Schreier generators over the point group),
// then the group is rewritten on its HNF basis. Throws NotCrystallographic if
// the translations do not span, CapExceeded if the point group is too large.
Rebased standard_form(const QuadraticForm& form, const std::vector<AffineElement>& generators,
                      const std::vector<RatVector>& translations, std::size_t cap = 1152);

// Same group in the basis given by the columns of unimodular U (x = U x').
SpaceGroup change_basis(const SpaceGroup& sg, const IntMatrix& U);
// Same group conjugated by an affine map c: generators g -> c g c^-1.
SpaceGroup conjugate(const SpaceGroup& sg, const AffineElement& c);

}  // namespace flatbound
