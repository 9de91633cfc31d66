#pragma once

// Seeded generators of random space groups for property tests.

#include "flatbound/invariants.hpp"
#include "flatbound/linalg.hpp"
#include "oracles.hpp"

namespace randgroups {

using namespace flatbound;

// 1x1 and 2x2 diagonal blocks; the swap block makes lattices that do not split
// along the eigenspaces.
inline IntMatrix block_matrix(const std::vector<int>& blocks, std::size_t n) {
  IntMatrix M(n, n);
  std::size_t k = 0;
  for (int b : blocks) {
    switch (b) {
      case 1: M(k, k) = 1, k += 1; break;
      case -1: M(k, k) = -1, k += 1; break;
      case 2: M(k, k + 1) = M(k + 1, k) = 1, k += 2; break;      // swap
      case -2: M(k, k + 1) = M(k + 1, k) = -1, k += 2; break;    // negated swap
      case 4: M(k, k + 1) = -1, M(k + 1, k) = 1, k += 2; break;  // quarter turn
    }
  }
  return M;
}

inline std::vector<int> random_blocks(std::mt19937_64& rng, std::size_t n, const std::vector<int>& pool) {
  std::vector<int> out;
  std::size_t used = 0;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  while (used < n) {
    const int b = pool[pick(rng)];
    const std::size_t w = std::abs(b) == 1 ? 1 : 2;
    if (used + w > n) continue;
    out.push_back(b);
    used += w;
  }
  return out;
}

inline RatVector random_vector(std::mt19937_64& rng, std::size_t n, int den) {
  std::uniform_int_distribution<int> d(0, den - 1);
  RatVector v(n);
  for (auto& x : v) x = ratio(d(rng), den);
  return v;
}

inline RatMatrix random_diagonal_form(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(1, 5);
  RatMatrix G(n, n);
  for (std::size_t i = 0; i < n; ++i) G(i, i) = d(rng);
  return G;
}

// Conjugate the block generators by a random unimodular U and build the
// group; returns nullopt when the random vector system fails validation.
inline std::optional<SpaceGroup> assemble(std::mt19937_64& rng, std::size_t n, const std::vector<IntMatrix>& blocks,
                                          int den) {
  const IntMatrix U = oracle::random_unimodular(rng, n);
  const IntMatrix Ui = unimodular_inverse(U);
  std::vector<AffineElement> gens;
  std::vector<IntMatrix> linear;
  for (const auto& B : blocks) {
    const IntMatrix M = U * B * Ui;
    linear.push_back(M);
    gens.push_back({M, random_vector(rng, n, den)});
  }
  const PointGroup pg = close_point_group(linear, n);
  const RatMatrix G = oracle::averaged_form(pg.elements, random_diagonal_form(rng, n));
  SpaceGroup sg(QuadraticForm(G), gens);
  if (!sg.valid()) return std::nullopt;
  return sg;
}

// Holonomy Z2, torsion free, dimension n.
inline SpaceGroup random_z2_bieberbach(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    const auto blocks = random_blocks(rng, n, {1, -1, 2, -2});
    const IntMatrix B = block_matrix(blocks, n);
    if (B.is_identity()) continue;
    auto sg = assemble(rng, n, {B}, 2);
    if (sg && is_bieberbach(*sg) && sg->point_group().order() == 2) return *sg;
  }
}

// Valid crystallographic group (possibly with torsion), dimension n, one or two generators.
inline SpaceGroup random_crystallographic(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution two(0.5);
  while (true) {
    const std::vector<int> pool{1, -1, 2, -2, 4};
    std::vector<IntMatrix> blocks{block_matrix(random_blocks(rng, n, pool), n)};
    if (two(rng)) {
      // Second generator: a sign change on whole coordinates commutes with diagonal blocks only,
      // so keep it diagonal-sign on the same partition.
      IntMatrix S = IntMatrix::identity(n);
      std::bernoulli_distribution flip(0.5);
      for (std::size_t i = 0; i < n; ++i)
        if (flip(rng)) S(i, i) = -1;
      blocks.push_back(S);
    }
    if (blocks.front().is_identity()) continue;
    if (auto sg = assemble(rng, n, blocks, 2)) return *sg;
  }
}

}  // namespace randgroups
