#include "flatbound/subgroups.hpp"

#include "flatbound/linalg.hpp"

namespace flatbound {

namespace {

int bit(int sign) {
  if (sign != 1 && sign != -1) fail(ErrorCode::InvalidArgument, "sign values must be +1 or -1");
  return sign == -1 ? 1 : 0;
}

std::vector<RatVector> unit_vectors(std::size_t n) {
  std::vector<RatVector> out(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

}  // namespace

bool SignAssignment::trivial() const {
  for (int s : generators)
    if (s != 1) return false;
  for (int s : lattice)
    if (s != 1) return false;
  return true;
}

int SignHomomorphism::on_lattice(const IntVector& z) const {
  Integer acc = 0;
  for (std::size_t j = 0; j < z.size(); ++j)
    if (sign_.lattice[j] == -1) acc += z[j];
  return mpz_odd_p(acc.get_mpz_t()) ? 1 : 0;
}

SignHomomorphism::SignHomomorphism(const SpaceGroup& sg, SignAssignment sign) : sign_(std::move(sign)) {
  sg.require_valid();
  const std::size_t n = sg.dim();
  const auto& gens = sg.generators();
  if (sign_.generators.size() != gens.size() || sign_.lattice.size() != n)
    fail(ErrorCode::DimensionMismatch, "sign assignment has the wrong length");
  for (int s : sign_.generators) bit(s);
  for (int s : sign_.lattice) bit(s);

  // The lattice part must be invariant under conjugation: sign(M e_j) == sign(e_j).
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t j = 0; j < n; ++j)
      if (on_lattice(gens[g].linear.column(j)) != bit(sign_.lattice[j]))
        fail(ErrorCode::NotAHomomorphism, "lattice signs are not invariant under generator " + std::to_string(g + 1));

  const PointGroup& pg = sg.point_group();
  lift_bits_.assign(pg.order(), 0);
  for (std::size_t i = 1; i < pg.order(); ++i) {
    const std::size_t g = pg.via[i], p = pg.parent[i];
    const IntVector z = to_integer(gens[g].linear * sg.vector(p) + gens[g].translation - sg.vector(i));
    lift_bits_[i] = (bit(sign_.generators[g]) + lift_bits_[p] + on_lattice(z)) % 2;
  }
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::size_t i = *pg.index_of(gens[g].linear);
    const IntVector z = to_integer(gens[g].translation - sg.vector(i));
    if ((lift_bits_[i] + on_lattice(z)) % 2 != bit(sign_.generators[g]))
      fail(ErrorCode::NotAHomomorphism, "inconsistent sign on generator " + std::to_string(g + 1));
  }
  for (std::size_t i = 0; i < pg.order(); ++i)
    for (std::size_t j = 0; j < pg.order(); ++j)
      if ((lift_bits_[i] + lift_bits_[j]) % 2 != (lift_bits_[pg.table[i][j]] + on_lattice(sg.cocycle(i, j))) % 2)
        fail(ErrorCode::NotAHomomorphism, "sign is not multiplicative on the point group");
}

int SignHomomorphism::operator()(const SpaceGroup& sg, const AffineElement& e) const {
  const auto i = sg.point_group().index_of(e.linear);
  if (!i) fail(ErrorCode::InvalidArgument, "element is not in the group");
  const RatVector z = e.translation - sg.vector(*i);
  if (!is_integral(z)) fail(ErrorCode::InvalidArgument, "element is not in the group");
  return (lift_bits_[*i] + on_lattice(to_integer(z))) % 2;
}

std::vector<SignAssignment> sign_homomorphisms(const SpaceGroup& sg) {
  sg.require_valid();
  const std::size_t k = sg.generators().size(), n = sg.dim();
  if (k + n >= 24) fail(ErrorCode::CapExceeded, "too many generators to enumerate sign homomorphisms");
  std::vector<SignAssignment> out;
  for (unsigned long mask = 1; mask < (1ul << (k + n)); ++mask) {
    SignAssignment s;
    for (std::size_t i = 0; i < k; ++i) s.generators.push_back(mask >> i & 1 ? -1 : 1);
    for (std::size_t j = 0; j < n; ++j) s.lattice.push_back(mask >> (k + j) & 1 ? -1 : 1);
    try {
      SignHomomorphism check(sg, s);
    } catch (const Error&) {
      continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

SignAssignment determinant_sign(const SpaceGroup& sg) {
  SignAssignment s;
  for (const auto& g : sg.generators()) s.generators.push_back(determinant(g.linear) == 1 ? 1 : -1);
  s.lattice.assign(sg.dim(), 1);
  return s;
}

Rebased index_two_subgroup(const SpaceGroup& sg, const SignAssignment& sign) {
  if (sign.trivial()) fail(ErrorCode::TrivialSign, "sign assignment is identically +1");
  const SignHomomorphism phi(sg, sign);
  const std::size_t n = sg.dim();
  const PointGroup& pg = sg.point_group();

  std::size_t pivot = n;
  for (std::size_t j = 0; j < n && pivot == n; ++j)
    if (sign.lattice[j] == -1) pivot = j;

  std::vector<AffineElement> gens;
  std::vector<RatVector> translations;
  if (pivot < n) {
    // Kernel lattice {z : sign(z) = +1}; every point element keeps a lift.
    for (std::size_t j = 0; j < n; ++j) {
      RatVector t(n);
      t[j] = 1;
      if (j == pivot)
        t[j] = 2;
      else if (sign.lattice[j] == -1)
        t[pivot] = 1;
      translations.push_back(std::move(t));
    }
    RatVector ep(n);
    ep[pivot] = 1;
    for (std::size_t g = 0; g < sg.generators().size(); ++g) {
      const AffineElement& e = sg.generators()[g];
      gens.push_back(sign.generators[g] == 1 ? e : e * AffineElement::pure_translation(ep));
    }
  } else {
    // Sign factors through the point group: keep the lattice, halve the point group.
    translations = unit_vectors(n);
    std::vector<IntMatrix> chosen;
    for (std::size_t i = 1; i < pg.order(); ++i) {
      if (phi.on_lift(i) != 0) continue;
      if (!chosen.empty() && close_point_group(chosen, n).contains(pg.elements[i])) continue;
      chosen.push_back(pg.elements[i]);
      gens.push_back(sg.lift(i));
      if (2 * close_point_group(chosen, n).order() == pg.order()) break;
    }
  }
  return standard_form(sg.form(), gens, translations);
}

Rebased extend_by_involution(const SpaceGroup& sg, const AffineElement& g) {
  sg.require_valid();
  const std::size_t n = sg.dim();
  if (g.dim() != n || g.linear.rows() != n || g.linear.cols() != n) fail(ErrorCode::DimensionMismatch, "involution dimension");
  const Integer det = determinant(g.linear);
  if (det != 1 && det != -1) fail(ErrorCode::NotNormalizing, "linear part does not preserve the lattice");
  if (!sg.form().preserved_by(g.linear)) fail(ErrorCode::NotNormalizing, "linear part is not an isometry of the form");
  if (sg.contains(g)) fail(ErrorCode::AlreadyInside, "element already belongs to the group");
  const AffineElement ginv = g.inverse();
  for (std::size_t k = 0; k < sg.generators().size(); ++k)
    if (!sg.contains(g * sg.generators()[k] * ginv))
      fail(ErrorCode::NotNormalizing, "conjugate of generator " + std::to_string(k + 1) + " leaves the group");
  if (!sg.contains(g * g)) fail(ErrorCode::SquareOutside, "square of the element is not in the group");

  std::vector<AffineElement> gens = sg.generators();
  gens.push_back(g);
  return standard_form(sg.form(), gens, unit_vectors(n));
}

SignAssignment coset_sign(const Rebased& ext, const SpaceGroup& sg) {
  const RatMatrix& B = ext.basis;
  const RatMatrix Binv = inverse(B);
  SignAssignment s;
  for (const auto& e : ext.group.generators()) {
    // Back to the coordinates of sg: x = B x'.
    const RatMatrix M = B * to_rational(e.linear) * Binv;
    const AffineElement old{to_integer(M), B * e.translation};
    s.generators.push_back(sg.contains(old) ? 1 : -1);
  }
  for (std::size_t j = 0; j < sg.dim(); ++j) s.lattice.push_back(is_integral(B.column(j)) ? 1 : -1);
  return s;
}

}  // namespace flatbound
