#pragma once

#include <vector>

#include "flatbound/matrix.hpp"

namespace flatbound {

// Symmetric positive-definite rational Gram matrix of a lattice basis.
class QuadraticForm {
public:
  // Throws NotPositiveDefinite (or DimensionMismatch) on invalid input.
  explicit QuadraticForm(RatMatrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const RatMatrix& gram() const { return gram_; }

  Rational value(const IntVector& x) const;
  Rational inner(const IntVector& x, const IntVector& y) const;
  bool preserved_by(const IntMatrix& A) const;
  // Gram matrix of the basis given by the columns of B.
  QuadraticForm rebased(const RatMatrix& B) const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.gram_ == b.gram_; }

private:
  RatMatrix gram_;
};

// All leading principal minors positive.
bool is_positive_definite(const RatMatrix& gram);

constexpr std::size_t kDefaultIsometryCap = 1152;

// The finite group {A in GL_n(Z) : A^T G A = G}, sorted with the identity first
// and the remaining elements in lexicographic order. Throws CapExceeded when
// the group has more than cap elements.
std::vector<IntMatrix> form_isometries(const QuadraticForm& form, std::size_t cap = kDefaultIsometryCap);

// Integer vectors x with value(x) == norm.
std::vector<IntVector> vectors_of_norm(const QuadraticForm& form, const Rational& norm);

}  // namespace flatbound
