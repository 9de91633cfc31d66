#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "flatbound/space_group.hpp"

namespace flatbound {

struct TorsionWitness {
  std::size_t element;  // index into the point group
  IntVector shift;      // (M, v(M) + shift) has a fixed point
};

// nullopt iff the group is torsion free (Bieberbach).
std::optional<TorsionWitness> torsion_witness(const SpaceGroup& sg);
bool is_bieberbach(const SpaceGroup& sg);

bool is_orientable(const SpaceGroup& sg);
std::size_t betti_one(const SpaceGroup& sg);

struct HolonomyType {
  std::size_t order = 1;
  bool abelian = true;
  // Elementary divisors (prime powers, ascending) when abelian; empty otherwise.
  std::vector<Integer> invariants;

  std::weak_ordering operator<=>(const HolonomyType&) const = default;
};

HolonomyType holonomy_invariants(const SpaceGroup& sg);

// Finitely generated abelian group Z^rank + sum Z/torsion_i.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, ascending by divisibility

  std::weak_ordering operator<=>(const AbelianGroup&) const = default;
};

std::string to_string(const AbelianGroup& a);

// Abelian group presented by the rows of a relation matrix.
AbelianGroup abelian_quotient(const IntMatrix& relations, std::size_t generators);

// H_1 from the catalog presentation: generators e_1..e_n, g_1..g_k; rows
// (M_i - I) e_j and, per relator w, e(w) . g - t_w. Throws MissingPresentation
// or NonIntegralRelator.
AbelianGroup first_homology(const SpaceGroup& sg);

// H_1 from the presentation read off the multiplication table: generators
// e_1..e_n and one g_M per point-group element, rows (M - I) e_j and
// g_M + g_N - g_MN - c(M, N). Needs no relators.
AbelianGroup abelianization(const SpaceGroup& sg);

// Affine invariant of one point-group element.
struct ElementClass {
  int determinant;
  std::size_t fixed_dim;
  Integer vector_order;  // order of v(M) in Q^n / (Z^n + Im_Q(M - I))

  std::weak_ordering operator<=>(const ElementClass&) const = default;
};

ElementClass element_class(const SpaceGroup& sg, std::size_t i);

struct Fingerprint {
  std::size_t dim = 0;
  bool orientable = true;
  std::size_t betti1 = 0;
  HolonomyType holonomy;
  AbelianGroup h1;
  std::vector<ElementClass> classes;  // sorted multiset over the point group
  // Fingerprints, one level shallower, of all index-2 subgroups; sorted.
  std::vector<Fingerprint> subgroups;

  friend std::weak_ordering operator<=>(const Fingerprint& a, const Fingerprint& b);
  friend bool operator==(const Fingerprint& a, const Fingerprint& b) { return (a <=> b) == 0; }
};

std::string to_string(const Fingerprint& f);

// Requires a valid group. Invariant under unimodular basis change and affine conjugation.
// depth = levels of index-2 subgroup profiles; one level leaves HW10 and HW12 equal.
Fingerprint fingerprint(const SpaceGroup& sg, std::size_t depth = 2);

}  // namespace flatbound
