#pragma once

// Exact integer and rational linear algebra: normal forms, Diophantine and
// congruence solvers, and the rational helpers built on top of them.

#include <optional>
#include <vector>

#include "flatbound/matrix.hpp"

namespace flatbound {

// U * A * V == S with U, V unimodular and S diagonal, s1 | s2 | ... >= 0.
struct SmithForm {
  IntMatrix S, U, V;
  std::size_t rank = 0;
  // Nonzero diagonal entries s_1, ..., s_rank.
  IntVector invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& A);

// Row-style Hermite normal form of the lattice spanned by the rows of gens.
// Returns the nonzero rows only (a basis), pivots positive, entries above each
// pivot reduced into [0, pivot).
IntMatrix hermite_row_basis(const IntMatrix& gens);

struct IntegerSolution {
  IntVector x0;
  std::vector<IntVector> kernel;  // Z-basis of {z : A z = 0}
};

// All integer solutions of A x = b, or nullopt when there are none.
std::optional<IntegerSolution> solve_integer_system(const IntMatrix& A, const IntVector& b);
// Rational right-hand side: false unless b is integral and A x = b is solvable over Z.
bool integer_solvable(const IntMatrix& A, const RatVector& b);

// Solution set of A t == b (mod Z^m) for t in Q^n:
//   t0 + span_Q(directions) + span_Z(lattice).
// For integral A the lattice contains Z^n and residues() enumerates one
// representative per connected component of the solution set modulo Z^n.
struct CongruenceSolution {
  RatVector t0;
  std::vector<IntVector> directions;  // primitive integer vectors
  std::vector<RatVector> lattice;     // generators beyond Z^n, with their orders
  std::vector<Integer> lattice_orders;

  std::vector<RatVector> residues() const;
};

std::optional<CongruenceSolution> solve_affine_congruence(const RatMatrix& A, const RatVector& b);

std::size_t rank(const RatMatrix& A);
Rational determinant(const RatMatrix& A);
Integer determinant(const IntMatrix& A);
// Throws InvalidArgument for singular input.
RatMatrix inverse(const RatMatrix& A);
IntMatrix unimodular_inverse(const IntMatrix& A);

// Basis of ker_Q(A) made of primitive integer vectors (first nonzero entry positive).
std::vector<IntVector> rational_kernel(const RatMatrix& A);
std::vector<IntVector> rational_kernel(const IntMatrix& A);

// Positive scalar multiple of v that is a primitive integer vector (v != 0).
IntVector primitive(const RatVector& v);

}  // namespace flatbound
