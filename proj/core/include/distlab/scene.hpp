#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "distlab/geometry2d.hpp"
#include "distlab/geometry3d.hpp"

namespace distlab {

/// Heterogeneous container of exact 2D/3D objects. All object types are
/// stored canonical by construction; dedupe() enforces uniqueness within
/// each family.
struct Scene {
  std::vector<Point2> points2;
  std::vector<Line2> lines2;
  std::vector<Circle2> circles2;
  std::vector<Point3> points3;
  std::vector<Plane3> planes3;
  std::vector<Line3> lines3;
  std::vector<Sphere3> spheres3;
  std::map<std::string, std::string> metadata;

  /// Removes duplicates family by family, preserving first-seen order.
  /// Returns the number of merged objects.
  std::size_t dedupe();

  std::size_t totalObjects() const {
    return points2.size() + lines2.size() + circles2.size() + points3.size() +
           planes3.size() + lines3.size() + spheres3.size();
  }
};

}  // namespace distlab
