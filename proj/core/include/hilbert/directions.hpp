#pragma once

#include <array>
#include <vector>

#include "hilbert/common.hpp"

namespace hilbert {

/// A deterministic set of unit directions in R^n.
///
/// In the plane the set is ordered by angle (`cyclic`); in R^3 mesh sets
/// carry a triangulation of the sphere. `antipode[i]` is the index of
/// `-dirs[i]` when the set is centrally symmetric (exact negation), else -1.
struct DirectionSet {
  int dim = 0;
  std::vector<Vec> dirs;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> antipode;
  bool cyclic = false;

  std::size_t size() const { return dirs.size(); }
  bool symmetric() const;
};

/// `count` equally spaced angles 2 pi k / count (count must be even).
DirectionSet circleDirections(int count);

/// Icosphere with at least `minCount` vertices (12, 42, 162, 642, 2562,
/// 10242, ...). Levels are nested: a finer level contains every vertex of
/// the coarser ones at the same indices.
DirectionSet icosphere(int minCount);

/// Sphere set with a boundary mesh: {+1,-1} on the line, equally spaced
/// angles in the plane, icosphere in space. Throws for n > 3.
DirectionSet meshDirections(int n, int minCount);

/// Prefix-nested low-discrepancy directions: van der Corput angles in the
/// plane, area-preserving Halton(2,3) in space, normalized Halton points of
/// the cube inside the unit ball above. Any prefix of a longer set equals
/// the shorter set.
DirectionSet lowDiscrepancyDirections(int n, int count);

/// Angle spacing (radians) that bounds how far any unit vector is from the
/// nearest member of `set`; used to bracket local refinements.
double angularSpacing(const DirectionSet& set);

}  // namespace hilbert
