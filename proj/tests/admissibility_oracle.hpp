#pragma once

// Independent admissibility checks by direct sampling: no use of the
// library's congruence solver or torsion loci.

#include "flatbound/quadratic_form.hpp"
#include "flatbound/space_group.hpp"
#include "oracles.hpp"

namespace oracle {

// No element of the coset g*Gamma of the form g * lift_i * t_z, z in [-r, r]^n, has a fixed point.
inline bool coset_fixed_point_free(const SpaceGroup& sg, const AffineElement& g, int r = 1) {
  bool ok = true;
  for (std::size_t i = 0; i < sg.point_group().order() && ok; ++i)
    for_each_box_point(sg.dim(), r, [&](const IntVector& z) {
      if (ok && has_fixed_point(g * sg.lift(i) * AffineElement::pure_translation(to_rational(z)))) ok = false;
    });
  return ok;
}

inline bool normalizes(const SpaceGroup& sg, const AffineElement& g) {
  const AffineElement gi = g.inverse();
  for (const auto& h : sg.generators())
    if (!sg.contains(g * h * gi)) return false;
  for (std::size_t j = 0; j < sg.dim(); ++j) {
    RatVector e(sg.dim());
    e[j] = 1;
    if (!sg.contains(g * AffineElement::pure_translation(e) * gi)) return false;
  }
  return true;
}

inline bool admissible_by_sampling(const SpaceGroup& sg, const AffineElement& g, int r = 1) {
  return !sg.contains(g) && sg.contains(g * g) && normalizes(sg, g) && coset_fixed_point_free(sg, g, r);
}

// Scan linear parts with entries in {-1,0,1} preserving the form and
// translations on the (1/den)-grid; returns the first admissible element found.
inline std::optional<AffineElement> grid_scan(const SpaceGroup& sg, int den = 4) {
  const std::size_t n = sg.dim();
  for (const auto& A : bounded_isometries(sg.form(), 1)) {
    bool found = false;
    AffineElement hit;
    IntVector c(n, 0);
    while (!found) {
      RatVector t(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = ratio(c[i], den);
      const AffineElement g{A, t};
      if (admissible_by_sampling(sg, g)) found = true, hit = g;
      std::size_t i = 0;
      while (i < n && c[i] == den - 1) c[i] = 0, ++i;
      if (i == n) break;
      c[i] += 1;
    }
    if (found) return hit;
  }
  return std::nullopt;
}

}  // namespace oracle
