#include "flatbound/bands.hpp"

#include "flatbound/invariants.hpp"
#include "flatbound/linalg.hpp"

namespace flatbound {

namespace {

// x-sign and y-action of a soul element, written in boundary coordinates.
AffineElement lift_to_band(int sign, const IntMatrix& M, const RatVector& v, const RatMatrix& B,
                           const RatMatrix& Binv, const Rational& shift) {
  const std::size_t m = M.rows();
  const IntMatrix Mb = to_integer(Binv * to_rational(M) * B);
  const RatVector vb = Binv * v;
  AffineElement e{IntMatrix(m + 1, m + 1), RatVector(m + 1)};
  e.linear(0, 0) = sign;
  if (sign == -1) e.translation[0] = shift;
  for (std::size_t i = 0; i < m; ++i) {
    e.translation[i + 1] = vb[i];
    for (std::size_t j = 0; j < m; ++j) e.linear(i + 1, j + 1) = Mb(i, j);
  }
  return e;
}

void add_band_generators(const FlatBand& band, const RatMatrix& B, const Rational& shift,
                         std::vector<AffineElement>& out) {
  const RatMatrix Binv = inverse(B);
  const std::size_t m = band.base.dim();
  const auto& gens = band.base.generators();
  for (std::size_t g = 0; g < gens.size(); ++g)
    out.push_back(lift_to_band(band.flip.generators[g], gens[g].linear, gens[g].translation, B, Binv, shift));
  for (std::size_t j = 0; j < m; ++j) {
    RatVector e(m);
    e[j] = 1;
    out.push_back(lift_to_band(band.flip.lattice[j], IntMatrix::identity(m), e, B, Binv, shift));
  }
}

}  // namespace

FlatBand make_band(SpaceGroup base, SignAssignment flip, Rational width) {
  if (width <= 0) fail(ErrorCode::InvalidArgument, "band width must be positive");
  if (!is_bieberbach(base)) fail(ErrorCode::NotBieberbach, "band soul must be a Bieberbach group");
  SignHomomorphism check(base, flip);
  return FlatBand{std::move(base), std::move(flip), std::move(width)};
}

Rebased boundary_rebased(const FlatBand& band) {
  if (band.flip.trivial()) {
    const std::size_t m = band.base.dim();
    return {band.base, to_rational(IntMatrix::identity(m))};
  }
  return index_two_subgroup(band.base, band.flip);
}

SpaceGroup glue(const FlatBand& b1, const FlatBand& b2) {
  if (b1.flip.trivial() != b2.flip.trivial())
    fail(ErrorCode::BoundaryMismatch, "cannot glue a band with two boundary components to one with a single component");
  const Rebased d1 = boundary_rebased(b1), d2 = boundary_rebased(b2);
  const SpaceGroup &g1 = d1.group, &g2 = d2.group;
  if (!(g1.form() == g2.form()) || g1.point_group().elements != g2.point_group().elements)
    fail(ErrorCode::BoundaryMismatch, "band boundaries differ");
  for (std::size_t i = 0; i < g1.point_group().order(); ++i)
    if (g1.vector(i) != g2.vector(i)) fail(ErrorCode::BoundaryMismatch, "band boundaries have different vector systems");

  const std::size_t m = g1.dim();
  const Rational shift = 2 * (b1.width + b2.width);
  std::vector<AffineElement> gens;
  add_band_generators(b1, d1.basis, 0, gens);
  add_band_generators(b2, d2.basis, shift, gens);

  std::vector<RatVector> translations;
  for (std::size_t j = 0; j < m; ++j) {
    RatVector t(m + 1);
    t[j + 1] = 1;
    translations.push_back(std::move(t));
  }
  if (b1.flip.trivial()) {
    RatVector t(m + 1);
    t[0] = shift;
    translations.push_back(std::move(t));
  }

  RatMatrix gram(m + 1, m + 1);
  gram(0, 0) = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram(i + 1, j + 1) = g1.form().gram()(i, j);

  SpaceGroup out = standard_form(QuadraticForm(gram), gens, translations).group;
  if (!is_bieberbach(out)) fail(ErrorCode::NotBieberbach, "glued group has torsion");
  return out;
}

SpaceGroup double_band(const FlatBand& band) { return glue(band, band); }

SpaceGroup orientation_cover(const SpaceGroup& sg) {
  sg.require_valid();
  if (is_orientable(sg)) fail(ErrorCode::AlreadyOrientable, "group is already orientable");
  return index_two_subgroup(sg, determinant_sign(sg)).group;
}

}  // namespace flatbound
