#pragma once

#include <optional>
#include <span>
#include <vector>

#include "distlab/geometry2d.hpp"
#include "distlab/geometry3d.hpp"
#include "distlab/scene.hpp"

namespace distlab {

enum class ConfigKind {
  Collinear,
  CylinderPlanes,
  ConePlanes,
  CylinderLines,
  ConeLines,
  HyperboloidLines,
  CollinearSphereCenters,
};

/// A detected degenerate configuration: the witnessing axis, the indices of
/// the collinear points (sphere indices for CollinearSphereCenters) and of
/// the planes/lines in the group, and the (s, t) sizes found.
struct ConfigReport {
  ConfigKind kind = ConfigKind::Collinear;
  std::optional<Line2> axis2;
  std::optional<Line3> axis3;
  std::vector<std::size_t> pointMembers;
  std::vector<std::size_t> objectMembers;
  std::size_t s = 0;
  std::size_t t = 0;
};

const char* configKindName(ConfigKind kind);

/// Reports a line through at least `s` of the points, if one exists.
std::optional<ConfigReport> detectCollinear(std::span<const Point2> points, std::size_t s);
std::optional<ConfigReport> detectCollinear(std::span<const Point3> points, std::size_t s);

/// Searches for an s x t cone or cylinder configuration: s collinear points
/// on an axis, and t planes tangent to a common cone or cylinder with that
/// axis. Axis candidates are exactly the lines through >= s input points.
/// The All variant returns every qualifying group across all axes.
std::optional<ConfigReport> detectPlaneConeCylinder(std::span<const Point3> points,
                                                    std::span<const Plane3> planes, std::size_t s,
                                                    std::size_t t);
std::vector<ConfigReport> detectPlaneConeCylinderAll(std::span<const Point3> points,
                                                     std::span<const Plane3> planes, std::size_t s,
                                                     std::size_t t);

/// Searches for an s x t cone / cylinder / hyperboloid-of-revolution
/// configuration of lines about an axis through >= s points. Lines are
/// classified by the exact triple (squared distance to the axis, squared
/// angle cosine, axial foot of the common perpendicular).
std::optional<ConfigReport> detectLineConeCylinderHyperboloid(std::span<const Point3> points,
                                                              std::span<const Line3> lines,
                                                              std::size_t s, std::size_t t);
std::vector<ConfigReport> detectLineConeCylinderHyperboloidAll(std::span<const Point3> points,
                                                               std::span<const Line3> lines,
                                                               std::size_t s, std::size_t t);

std::optional<ConfigReport> detectCollinearSphereCenters(std::span<const Sphere3> spheres,
                                                         std::size_t k);

/// Re-verifies a report against the defining exact predicates of its kind,
/// resolving the indices against the scene's families.
bool verifyReport(const ConfigReport& report, const Scene& scene);

}  // namespace distlab
