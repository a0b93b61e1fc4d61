#pragma once

#include <cstddef>
#include <vector>

#include "brick/polytope.hpp"

namespace brick {

/// Exact-rational verification of a claimed polytope description, independent
/// of the combinatorial construction:
///   (a) no claimed vertex is a convex combination of the other points,
///   (b) every other point is a convex combination of the claimed vertices,
///   (c) every claimed facet inequality is valid, tight exactly on its stored
///       incident set, and that set is (dim-1)-dimensional,
///   (d) re-deriving the facets from the vertex set alone (exact gift-wrapping
///       over the face lattice) gives the claimed facet incident sets.
/// Throws DimensionTooLarge (ambient > 8) or OracleMismatch with a witness.
struct OracleReport {
  int vertices_checked = 0;
  int nonvertices_checked = 0;
  int facets_checked = 0;
  std::size_t derived_facets = 0;
};

OracleReport hull_oracle_verify(const BrickPolytope& p,
                                const std::vector<std::vector<int>>& all_vectors);

/// Facets of conv(points) as sorted point-index sets (exact arithmetic); the
/// re-derivation engine behind check (d), exposed for tests.
std::vector<std::vector<int>> hull_facets(const std::vector<std::vector<int>>& points);

/// Is x a convex combination of pts? Exact rational phase-1 simplex.
bool in_convex_hull(const std::vector<int>& x, const std::vector<std::vector<int>>& pts);

/// Affine dimension of a point set (-1 when empty).
int affine_rank(const std::vector<std::vector<int>>& points);

}  // namespace brick
