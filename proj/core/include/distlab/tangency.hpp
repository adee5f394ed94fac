#pragma once

#include <span>

#include "distlab/census.hpp"
#include "distlab/geometry2d.hpp"
#include "distlab/geometry3d.hpp"

namespace distlab {

/// Family-level tangency count: tangent pairs, distinct tangency locations
/// (exact rational points, so the clustering is exact), and the tangency
/// graph. For the symmetric circle-circle census the graph has identical
/// sides and edges i < j; triplePoint reports whether some point carries
/// three or more circles mutually tangent there.
struct TangencyCensus {
  std::size_t pairCount = 0;
  std::size_t pointCount = 0;
  BipartiteGraph graph;
  bool triplePoint = false;
};

TangencyCensus countLineCircleTangencies(std::span<const Line2> lines,
                                         std::span<const Circle2> circles);

TangencyCensus countCircleTangencies(std::span<const Circle2> circles);

TangencyCensus countPlaneSphereTangencies(std::span<const Plane3> planes,
                                          std::span<const Sphere3> spheres);

TangencyCensus countLineSphereTangencies(std::span<const Line3> lines,
                                         std::span<const Sphere3> spheres);

}  // namespace distlab
