#include "flatbound/quadratic_form.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "flatbound/linalg.hpp"

namespace flatbound {

bool is_positive_definite(const RatMatrix& gram) {
  if (!gram.square()) return false;
  for (std::size_t k = 1; k <= gram.rows(); ++k) {
    RatMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = gram(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

QuadraticForm::QuadraticForm(RatMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.square() || gram_.rows() == 0) fail(ErrorCode::DimensionMismatch, "Gram matrix must be square and non-empty");
  if (gram_ != gram_.transpose()) fail(ErrorCode::NotPositiveDefinite, "Gram matrix is not symmetric");
  if (!is_positive_definite(gram_)) fail(ErrorCode::NotPositiveDefinite, "Gram matrix is not positive definite");
}

Rational QuadraticForm::inner(const IntVector& x, const IntVector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (y[j] != 0) s += Rational(x[i] * y[j]) * gram_(i, j);
  }
  return s;
}

Rational QuadraticForm::value(const IntVector& x) const { return inner(x, x); }

bool QuadraticForm::preserved_by(const IntMatrix& A) const {
  if (A.rows() != dim() || A.cols() != dim()) return false;
  const RatMatrix Ar = to_rational(A);
  return Ar.transpose() * gram_ * Ar == gram_;
}

QuadraticForm QuadraticForm::rebased(const RatMatrix& B) const { return QuadraticForm(B.transpose() * gram_ * B); }

namespace {

// Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
struct Cholesky {
  std::vector<Rational> d;
  RatMatrix mu;
};

Cholesky decompose(const RatMatrix& G) {
  const std::size_t n = G.rows();
  RatMatrix Q = G;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Q(j, i) = Q(i, j);
      Q(i, j) /= Q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) Q(k, l) -= Q(k, i) * Q(i, l);
  }
  Cholesky c{std::vector<Rational>(n), RatMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    c.d[i] = Q(i, i);
    for (std::size_t j = i + 1; j < n; ++j) c.mu(i, j) = Q(i, j);
  }
  return c;
}

void enumerate(const Cholesky& ch, std::size_t level, const Rational& budget, IntVector& x,
               std::vector<IntVector>& out) {
  const std::size_t n = x.size();
  Rational center = 0;
  for (std::size_t j = level + 1; j < n; ++j) center += ch.mu(level, j) * x[j];
  // Floating bounds widened by one; the exact budget test below decides.
  const double radius = std::sqrt(std::max(0.0, Rational(budget / ch.d[level]).get_d()));
  const double c = center.get_d();
  const long lo = static_cast<long>(std::floor(-c - radius)) - 1;
  const long hi = static_cast<long>(std::ceil(-c + radius)) + 1;
  for (long v = lo; v <= hi; ++v) {
    const Rational shifted = Rational(v) + center;
    const Rational rest = budget - ch.d[level] * shifted * shifted;
    if (rest < 0) continue;
    x[level] = v;
    if (level == 0) {
      if (rest == 0) out.push_back(x);
    } else {
      enumerate(ch, level - 1, rest, x, out);
    }
  }
  x[level] = 0;
}

}  // namespace

std::vector<IntVector> vectors_of_norm(const QuadraticForm& form, const Rational& norm) {
  std::vector<IntVector> out;
  if (norm <= 0) return out;
  const Cholesky ch = decompose(form.gram());
  IntVector x(form.dim());
  enumerate(ch, form.dim() - 1, norm, x, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntMatrix> form_isometries(const QuadraticForm& form, std::size_t cap) {
  const std::size_t n = form.dim();
  const RatMatrix& G = form.gram();

  std::map<Rational, std::vector<IntVector>> by_norm;
  std::vector<const std::vector<IntVector>*> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = by_norm.find(G(i, i));
    if (it == by_norm.end()) it = by_norm.emplace(G(i, i), vectors_of_norm(form, G(i, i))).first;
    candidates[i] = &it->second;
  }

  std::vector<IntMatrix> result;
  std::vector<IntVector> images(n);
  // Backtrack over images of the basis vectors, matching all inner products.
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      result.push_back(IntMatrix::from_columns(images, n));
      if (result.size() > cap) fail(ErrorCode::CapExceeded, "form isometry group exceeds cap " + std::to_string(cap));
      return;
    }
    for (const auto& x : *candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = form.inner(images[j], x) == G(j, i);
      if (!ok) continue;
      images[i] = x;
      self(self, i + 1);
    }
  };
  extend(extend, 0);

  std::sort(result.begin(), result.end());
  auto id = std::find(result.begin(), result.end(), IntMatrix::identity(n));
  std::rotate(result.begin(), id, id + 1);
  return result;
}

}  // namespace flatbound
