#include "flatbound/linalg.hpp"

#include <algorithm>
#include <utility>

namespace flatbound {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const Integer& d, const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0; }

void normalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

}  // namespace

IntVector SmithForm::invariant_factors() const {
  IntVector d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SmithForm f{A, IntMatrix::identity(m), IntMatrix::identity(n), 0};
  IntMatrix& S = f.S;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    for (;;) {
      // Pivot on the smallest nonzero entry of the trailing block.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S(i, j) != 0 && (pi == m || abs(S(i, j)) < abs(S(pi, pj)))) pi = i, pj = j;
      if (pi == m) {
        f.rank = t;
        return f;
      }
      swap_rows(S, t, pi), swap_rows(f.U, t, pi);
      swap_cols(S, t, pj), swap_cols(f.V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Integer q = tdiv(S(i, t), S(t, t));
        add_row(S, i, t, -q), add_row(f.U, i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer q = tdiv(S(t, j), S(t, t));
        add_col(S, j, t, -q), add_col(f.V, j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: pull a non-multiple into the pivot row.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divides(S(t, t), S(i, j))) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row(S, t, bad, 1), add_row(f.U, t, bad, 1);
    }
    if (S(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) S(t, j) = -S(t, j);
      for (std::size_t j = 0; j < m; ++j) f.U(t, j) = -f.U(t, j);
    }
  }
  f.rank = t;
  // t may stop at min(m, n) while trailing diagonal entries are zero.
  while (f.rank > 0 && S(f.rank - 1, f.rank - 1) == 0) --f.rank;
  return f;
}

IntMatrix hermite_row_basis(const IntMatrix& gens) {
  IntMatrix H = gens;
  const std::size_t m = H.rows(), n = H.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid down the column until a single nonzero entry remains at row r.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, c) != 0 && (best == m || abs(H(i, c)) < abs(H(best, c)))) best = i;
      if (best == m) break;
      swap_rows(H, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        add_row(H, i, r, -tdiv(H(i, c), H(r, c)));
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0)
      for (std::size_t j = 0; j < n; ++j) H(r, j) = -H(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
      add_row(H, i, r, -q);
    }
    ++r;
  }
  IntMatrix basis(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = H(i, j);
  return basis;
}

std::optional<IntegerSolution> solve_integer_system(const IntMatrix& A, const IntVector& b) {
  if (b.size() != A.rows()) fail(ErrorCode::DimensionMismatch, "solve_integer_system: rhs length");
  const SmithForm f = smith_normal_form(A);
  const IntVector c = f.U * b;
  IntVector y(A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (i < f.rank) {
      if (!divides(f.S(i, i), c[i])) return std::nullopt;
      y[i] = c[i] / f.S(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol{f.V * y, {}};
  for (std::size_t j = f.rank; j < A.cols(); ++j) {
    IntVector k = f.V.column(j);
    normalize_sign(k);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

bool integer_solvable(const IntMatrix& A, const RatVector& b) {
  if (!is_integral(b)) return false;
  return solve_integer_system(A, to_integer(b)).has_value();
}

std::optional<CongruenceSolution> solve_affine_congruence(const RatMatrix& A, const RatVector& b) {
  if (b.size() != A.rows()) fail(ErrorCode::DimensionMismatch, "solve_affine_congruence: rhs length");
  // A t = (D A)(t / D): solve the integral system for s = t / D, then t = D s.
  const Integer D = common_denominator(A);
  const IntMatrix Ai = to_integer(Rational(D) * A);
  const SmithForm f = smith_normal_form(Ai);
  const RatVector c = f.U * b;
  const std::size_t n = A.cols();

  RatVector y(n);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (i < f.rank)
      y[i] = c[i] / Rational(f.S(i, i));
    else if (!is_integral(c[i]))
      return std::nullopt;
  }
  CongruenceSolution sol;
  sol.t0 = Rational(D) * (f.V * y);
  for (std::size_t j = 0; j < n; ++j) {
    const IntVector col = f.V.column(j);
    if (j >= f.rank) {
      IntVector k = col;
      normalize_sign(k);
      sol.directions.push_back(std::move(k));
    } else {
      const Rational scale = Rational(D) / Rational(f.S(j, j));
      if (scale == 1 && D == 1) continue;
      sol.lattice.push_back(scale * to_rational(col));
      sol.lattice_orders.push_back(f.S(j, j));
    }
  }
  if (D == 1) sol.t0 = frac(sol.t0);
  return sol;
}

std::vector<RatVector> CongruenceSolution::residues() const {
  std::vector<RatVector> out{frac(t0)};
  for (std::size_t g = 0; g < lattice.size(); ++g) {
    std::vector<RatVector> next;
    for (const auto& base : out)
      for (Integer k = 0; k < lattice_orders[g]; ++k) next.push_back(frac(base + Rational(k) * lattice[g]));
    out = std::move(next);
  }
  return out;
}

namespace {

// Gaussian elimination over Q; returns rank and the determinant when square.
std::pair<std::size_t, Rational> eliminate(RatMatrix M) {
  const std::size_t m = M.rows(), n = M.cols();
  Rational det = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M(p, c) == 0) ++p;
    if (p == m) {
      det = 0;
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(M(p, j), M(r, j));
      det = -det;
    }
    det *= M(r, c);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (M(i, c) == 0) continue;
      const Rational q = M(i, c) / M(r, c);
      for (std::size_t j = c; j < n; ++j) M(i, j) -= q * M(r, j);
    }
    ++r;
  }
  if (r < n) det = 0;
  return {r, det};
}

}  // namespace

std::size_t rank(const RatMatrix& A) { return eliminate(A).first; }

Rational determinant(const RatMatrix& A) {
  if (!A.square()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (A.rows() == 0) return 1;
  return eliminate(A).second;
}

Integer determinant(const IntMatrix& A) { return determinant(to_rational(A)).get_num(); }

RatMatrix inverse(const RatMatrix& A) {
  if (!A.square()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = A.rows();
  RatMatrix M = A, I = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M(p, c) == 0) ++p;
    if (p == n) fail(ErrorCode::InvalidArgument, "matrix is singular");
    for (std::size_t j = 0; j < n; ++j) std::swap(M(p, j), M(c, j)), std::swap(I(p, j), I(c, j));
    const Rational piv = M(c, c);
    for (std::size_t j = 0; j < n; ++j) M(c, j) /= piv, I(c, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || M(i, c) == 0) continue;
      const Rational q = M(i, c);
      for (std::size_t j = 0; j < n; ++j) M(i, j) -= q * M(c, j), I(i, j) -= q * I(c, j);
    }
  }
  return I;
}

IntMatrix unimodular_inverse(const IntMatrix& A) {
  const RatMatrix inv = inverse(to_rational(A));
  if (!is_integral(inv)) fail(ErrorCode::InvalidArgument, "matrix is not unimodular");
  return to_integer(inv);
}

std::vector<IntVector> rational_kernel(const RatMatrix& A) {
  const Integer D = common_denominator(A);
  return rational_kernel(to_integer(Rational(D) * A));
}

std::vector<IntVector> rational_kernel(const IntMatrix& A) {
  const SmithForm f = smith_normal_form(A);
  std::vector<IntVector> basis;
  for (std::size_t j = f.rank; j < A.cols(); ++j) {
    IntVector k = f.V.column(j);
    normalize_sign(k);
    basis.push_back(std::move(k));
  }
  return basis;
}

IntVector primitive(const RatVector& v) {
  const Integer D = common_denominator(v);
  IntVector r(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = Rational(Rational(D) * v[i]).get_num();
    g = gcd(g, r[i]);
  }
  if (g == 0) fail(ErrorCode::InvalidArgument, "primitive of the zero vector");
  for (auto& x : r) x /= g;
  return r;
}

}  // namespace flatbound
