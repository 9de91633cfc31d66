#pragma once

// Deciding whether a Bieberbach manifold is the totally geodesic boundary of a
// compact flat manifold. Equivalently: does Gamma admit an index-2 torsion-free
// extension <Gamma, g>, i.e. an isometric involution g of R^n/Gamma without
// fixed points?
//
// For each admissible linear part A the translation parts t of g form a finite
// union of affine families t_j + W (mod Z^n). A family is blocked exactly when
// one "torsion locus" -A v_M + ker N + Z^n of a coset element g*(M, v_M)
// contains it (N = orbit sum of A M); otherwise a witness exists and is found
// by a deterministic grid scan.

#include <optional>
#include <string>
#include <vector>

#include "flatbound/invariants.hpp"
#include "flatbound/linalg.hpp"
#include "flatbound/space_group.hpp"
#include "flatbound/subgroups.hpp"

namespace flatbound {

// Isometries A of the form with A P A^-1 = P and A^2 in P; identity first.
std::vector<IntMatrix> linear_candidates(const SpaceGroup& sg, std::size_t cap = kDefaultIsometryCap);

// Solutions t (mod Z^n) of the involution and normalization congruences for A;
// nullopt when inconsistent.
std::optional<CongruenceSolution> translation_constraints(const SpaceGroup& sg, const IntMatrix& A);

struct Witness {
  std::size_t candidate;  // index into AdmissibilityReport::candidates
  AffineElement element;
  SpaceGroup soul;        // <sg, element> in standard form
  Fingerprint soul_fingerprint;
};

struct FamilyRecord {
  RatVector point;                     // t_j in [0,1)^n
  std::vector<IntVector> directions;   // W
  std::optional<std::size_t> blocking; // point-group index of M whose locus covers the family
  std::optional<std::size_t> witness;  // index into AdmissibilityReport::witnesses
};

struct CandidateRecord {
  IntMatrix linear;
  bool consistent = false;  // false: the congruences have no solution
  std::vector<FamilyRecord> families;

  bool refuted() const;
};

struct AdmissibilityReport {
  bool boundary = false;
  std::vector<CandidateRecord> candidates;
  std::vector<Witness> witnesses;  // first one is the primary witness

  const Witness* witness() const { return witnesses.empty() ? nullptr : &witnesses.front(); }
};

struct DecideOptions {
  std::size_t cap = kDefaultIsometryCap;
  // Largest grid denominator for the witness scan; 0 = unbounded. Exceeding it throws CapExceeded.
  std::size_t max_denominator = 0;
};

// Throws NotBieberbach, CapExceeded.
AdmissibilityReport decide_admissible(const SpaceGroup& sg, const DecideOptions& options = {});

// Independent re-check: g not in sg, g^2 in sg, g normalizes sg, <sg, g> torsion free.
bool verify_admissible(const SpaceGroup& sg, const AffineElement& g);

// Half of the translation gamma^N, gamma a lift of a generator of the cyclic
// holonomy of odd order N. Throws HolonomyNotOddCyclic.
AffineElement construct_odd_cyclic_involution(const SpaceGroup& sg);

// Which of the three holonomy-Z2 situations applies; see construct_z2_involution.
enum class Z2Case { Line, SingleClass, TwoClass };
const char* z2_case_name(Z2Case c);

struct Z2Involution {
  AffineElement element;
  Z2Case kind;
};

// Half of a primitive lattice vector negated by the holonomy generator M:
// for a line of fixed points this is the half-translation across it, otherwise
// t_d (lattice splits along the +-1 eigenspaces) or t_2d (index-2 case).
// Throws HolonomyNotZ2.
Z2Involution construct_z2_involution(const SpaceGroup& sg);

struct NamedGroup {
  std::string label;  // e.g. "C2/square"
  SpaceGroup group;
};

struct SoulPair {
  Fingerprint boundary, soul;
  // Where the pair was first seen.
  std::string boundary_label;
  AffineElement witness;
};

// Distinct (boundary, soul) fingerprint pairs over all witnesses of all inputs,
// in order of first appearance.
std::vector<SoulPair> boundary_soul_pairs(const std::vector<NamedGroup>& boundaries, const DecideOptions& options = {});

}  // namespace flatbound
