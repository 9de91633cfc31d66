#pragma once

#include <vector>

#include "flatbound/space_group.hpp"

namespace flatbound {

// Values +1/-1 on each point generator and each lattice basis vector.
struct SignAssignment {
  std::vector<int> generators;
  std::vector<int> lattice;

  bool trivial() const;
  friend bool operator==(const SignAssignment&, const SignAssignment&) = default;
};

// The homomorphism Gamma -> Z/2 determined by a sign assignment, evaluated on
// canonical lifts. Throws NotAHomomorphism when the assignment does not extend.
class SignHomomorphism {
public:
  SignHomomorphism(const SpaceGroup& sg, SignAssignment sign);

  const SignAssignment& assignment() const { return sign_; }
  // 0 for +1, 1 for -1.
  int on_lift(std::size_t i) const { return lift_bits_.at(i); }
  int on_lattice(const IntVector& z) const;
  int operator()(const SpaceGroup& sg, const AffineElement& e) const;

private:
  SignAssignment sign_;
  std::vector<int> lift_bits_;
};

// Every nontrivial homomorphism Gamma -> {+1,-1}, in a fixed order.
std::vector<SignAssignment> sign_homomorphisms(const SpaceGroup& sg);

// Sign assignment whose value on every element is det(linear part).
SignAssignment determinant_sign(const SpaceGroup& sg);

// Kernel of the sign homomorphism, rewritten on a basis of its own translation
// lattice; `basis` columns are that basis in the coordinates of sg.
// Throws NotAHomomorphism, TrivialSign.
Rebased index_two_subgroup(const SpaceGroup& sg, const SignAssignment& sign);

// <sg, g> in standard form. Requires g to normalize sg, g^2 in sg and g not in sg
// (NotNormalizing, SquareOutside, AlreadyInside otherwise).
Rebased extend_by_involution(const SpaceGroup& sg, const AffineElement& g);

// Sign on an extension that is -1 exactly off the original group.
// `ext` must come from extend_by_involution(sg, g).
SignAssignment coset_sign(const Rebased& ext, const SpaceGroup& sg);

}  // namespace flatbound
