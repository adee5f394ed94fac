#include "distlab/tangency.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace distlab {

namespace {

template <class LeftT, class RightT, class PointT>
TangencyCensus bipartiteCensus(std::span<const LeftT> left, std::span<const RightT> right,
                               PointT (*point)(const LeftT&, const RightT&)) {
  TangencyCensus census;
  census.graph.leftCount = left.size();
  census.graph.rightCount = right.size();
  std::unordered_set<PointT> points;
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (!tangent(left[i], right[j])) continue;
      census.graph.addEdge(i, j);
      points.insert(point(left[i], right[j]));
    }
  }
  census.pairCount = census.graph.edgeCount();
  census.pointCount = points.size();
  return census;
}

Point2 lineCirclePoint(const Line2& l, const Circle2& c) { return tangencyPoint(l, c); }
Point3 planeSpherePoint(const Plane3& p, const Sphere3& s) { return tangencyPoint(p, s); }
Point3 lineSpherePoint(const Line3& l, const Sphere3& s) { return tangencyPoint(l, s); }

}  // namespace

TangencyCensus countLineCircleTangencies(std::span<const Line2> lines,
                                         std::span<const Circle2> circles) {
  return bipartiteCensus<Line2, Circle2, Point2>(lines, circles, lineCirclePoint);
}

TangencyCensus countPlaneSphereTangencies(std::span<const Plane3> planes,
                                          std::span<const Sphere3> spheres) {
  return bipartiteCensus<Plane3, Sphere3, Point3>(planes, spheres, planeSpherePoint);
}

TangencyCensus countLineSphereTangencies(std::span<const Line3> lines,
                                         std::span<const Sphere3> spheres) {
  return bipartiteCensus<Line3, Sphere3, Point3>(lines, spheres, lineSpherePoint);
}

TangencyCensus countCircleTangencies(std::span<const Circle2> circles) {
  TangencyCensus census;
  census.graph.leftCount = circles.size();
  census.graph.rightCount = circles.size();
  std::unordered_map<Point2, std::vector<std::size_t>> atPoint;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      if (tangency(circles[i], circles[j]) == CircleTangency::None) continue;
      census.graph.addEdge(i, j);
      auto& members = atPoint[tangencyPoint(circles[i], circles[j])];
      for (const std::size_t idx : {i, j}) {
        if (std::find(members.begin(), members.end(), idx) == members.end()) {
          members.push_back(idx);
        }
      }
    }
  }
  census.pairCount = census.graph.edgeCount();
  census.pointCount = atPoint.size();
  for (const auto& [pt, members] : atPoint) {
    if (members.size() < 3) continue;
    // Circles sharing a tangency point are pairwise tangent there (they all
    // share the tangent line at that point); verify anyway.
    bool mutual = true;
    for (std::size_t a = 0; a < members.size() && mutual; ++a) {
      for (std::size_t b = a + 1; b < members.size() && mutual; ++b) {
        mutual = tangency(circles[members[a]], circles[members[b]]) != CircleTangency::None &&
                 tangencyPoint(circles[members[a]], circles[members[b]]) == pt;
      }
    }
    if (mutual) {
      census.triplePoint = true;
      break;
    }
  }
  return census;
}

}  // namespace distlab
