#include "flatbound/matrix.hpp"

#include <sstream>

namespace flatbound {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InfiniteOrder: return "InfiniteOrder";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotCrystallographic: return "NotCrystallographic";
    case ErrorCode::NotBieberbach: return "NotBieberbach";
    case ErrorCode::MissingPresentation: return "MissingPresentation";
    case ErrorCode::NonIntegralRelator: return "NonIntegralRelator";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::TrivialSign: return "TrivialSign";
    case ErrorCode::NotNormalizing: return "NotNormalizing";
    case ErrorCode::SquareOutside: return "SquareOutside";
    case ErrorCode::AlreadyInside: return "AlreadyInside";
    case ErrorCode::HolonomyNotOddCyclic: return "HolonomyNotOddCyclic";
    case ErrorCode::HolonomyNotZ2: return "HolonomyNotZ2";
    case ErrorCode::AlreadyOrientable: return "AlreadyOrientable";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::IncompatibleStyle: return "IncompatibleStyle";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

bool is_integral(const RatMatrix& m) { return is_integral(m.data()); }

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) fail(ErrorCode::InvalidArgument, "matrix entry is not an integer");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

IntVector to_integer(const RatVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i])) fail(ErrorCode::InvalidArgument, "vector entry is not an integer");
    r[i] = v[i].get_num();
  }
  return r;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

RatVector frac(const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = frac(v[i]);
  return r;
}

Integer common_denominator(const RatVector& v) {
  Integer d = 1;
  for (const auto& x : v) d = lcm(d, Integer(x.get_den()));
  return d;
}

Integer common_denominator(const RatMatrix& m) { return common_denominator(m.data()); }

RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector sum");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector difference");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector operator-(const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

RatVector operator*(const IntMatrix& m, const RatVector& v) {
  if (m.cols() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shape");
  RatVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) r[i] += Rational(m(i, j)) * v[j];
  return r;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector sum");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ')';
  return os.str();
}

namespace {

template <class T>
std::string matrix_string(const Matrix<T>& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const IntMatrix& m) { return matrix_string(m); }
std::string to_string(const RatMatrix& m) { return matrix_string(m); }

}  // namespace flatbound
