#pragma once

// Compact flat manifolds with connected geodesic boundary, stored as twisted
// I-bundles over their soul: the soul group acts on the mid-hyperplane and the
// flip sign says which elements exchange the two sides of the band.

#include "flatbound/space_group.hpp"
#include "flatbound/subgroups.hpp"

namespace flatbound {

struct FlatBand {
  SpaceGroup base;  // the soul
  SignAssignment flip;
  Rational width;   // half-thickness
};

// Throws NotBieberbach, NotAHomomorphism, InvalidArgument (width <= 0).
FlatBand make_band(SpaceGroup base, SignAssignment flip, Rational width);

// Kernel of the flip in its own lattice basis (basis columns in soul coordinates).
// With a trivial flip the boundary has two components, each a copy of the soul.
Rebased boundary_rebased(const FlatBand& band);
inline SpaceGroup boundary_of(const FlatBand& band) { return boundary_rebased(band).group; }
inline const SpaceGroup& soul_of(const FlatBand& band) { return band.base; }
inline bool two_boundary_components(const FlatBand& band) { return band.flip.trivial(); }

// Closed (m+1)-manifold obtained by gluing two bands along their common
// boundary; the new coordinate comes first. Throws BoundaryMismatch unless the
// boundaries are literally equal. double_band(b) == glue(b, b).
SpaceGroup glue(const FlatBand& b1, const FlatBand& b2);
SpaceGroup double_band(const FlatBand& band);

// Kernel of the determinant. Throws AlreadyOrientable.
SpaceGroup orientation_cover(const SpaceGroup& sg);

}  // namespace flatbound
