#pragma once

#include <vector>

#include "hilbert/common.hpp"

namespace hilbert {

/// Halfspace description {x : A x <= b} (rows of A are outward normals).
struct Halfspaces {
  Mat A;
  Vec b;
  int dim() const { return static_cast<int>(A.cols()); }
  int count() const { return static_cast<int>(A.rows()); }
};

/// Indices of the planar convex hull of `points`, counter-clockwise,
/// collinear points dropped (Andrew's monotone chain).
std::vector<int> convexHull2D(const std::vector<Vec>& points);

/// Facet halfspaces of conv(points) for points in R^1, R^2 or R^3. Facets
/// are found exactly (brute force over vertex triples in R^3), rows are
/// normalized to unit length and deduplicated. Throws if the points do not
/// span a full-dimensional polytope.
Halfspaces facetsOfHull(const std::vector<Vec>& points);

/// Vertices of the bounded polytope {A x <= b}, n <= 3, by enumerating
/// n-subsets of tight constraints. Deduplicated.
std::vector<Vec> polytopeVertices(const Halfspaces& h);

}  // namespace hilbert
