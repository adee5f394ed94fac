#include "distlab/detectors.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

namespace distlab {

const char* configKindName(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::Collinear: return "collinear";
    case ConfigKind::CylinderPlanes: return "cylinder-planes";
    case ConfigKind::ConePlanes: return "cone-planes";
    case ConfigKind::CylinderLines: return "cylinder-lines";
    case ConfigKind::ConeLines: return "cone-lines";
    case ConfigKind::HyperboloidLines: return "hyperboloid-lines";
    case ConfigKind::CollinearSphereCenters: return "collinear-sphere-centers";
  }
  return "?";
}

namespace {

template <class PointT, class LineT>
struct AxisCandidate {
  LineT line;
  std::vector<std::size_t> members;
};

// All lines through at least `s` of the points, with their member indices.
// Pair enumeration: every line spanned by >= 2 points is hit by some pair.
template <class PointT, class LineT>
std::vector<AxisCandidate<PointT, LineT>> richLines(std::span<const PointT> points, std::size_t s) {
  std::unordered_map<LineT, std::vector<std::size_t>> lines;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) continue;
      lines[LineT::through(points[i], points[j])];  // touch
    }
  }
  for (auto& [line, members] : lines) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (incident(points[i], line)) members.push_back(i);
    }
  }
  std::vector<AxisCandidate<PointT, LineT>> out;
  for (auto& [line, members] : lines) {
    if (members.size() >= s) out.push_back({line, std::move(members)});
  }
  return out;
}

}  // namespace

std::optional<ConfigReport> detectCollinear(std::span<const Point2> points, std::size_t s) {
  if (s < 3) throw std::invalid_argument("detectCollinear: s must be at least 3");
  for (auto& cand : richLines<Point2, Line2>(points, s)) {
    ConfigReport report;
    report.kind = ConfigKind::Collinear;
    report.axis2 = cand.line;
    report.pointMembers = std::move(cand.members);
    report.s = report.pointMembers.size();
    return report;
  }
  return std::nullopt;
}

std::optional<ConfigReport> detectCollinear(std::span<const Point3> points, std::size_t s) {
  if (s < 3) throw std::invalid_argument("detectCollinear: s must be at least 3");
  for (auto& cand : richLines<Point3, Line3>(points, s)) {
    ConfigReport report;
    report.kind = ConfigKind::Collinear;
    report.axis3 = cand.line;
    report.pointMembers = std::move(cand.members);
    report.s = report.pointMembers.size();
    return report;
  }
  return std::nullopt;
}

namespace {

// Axial parameter of the foot of the common perpendicular from `g` onto the
// axis; for intersecting lines this is the intersection parameter. Requires
// non-parallel directions.
Rational perpendicularFoot(const Line3& axis, const Line3& g) {
  const Vec3& v = axis.direction();
  const Vec3& vi = g.direction();
  const Vec3 w = g.anchor() - axis.anchor();
  const Rational vv = v.normSq();
  const Rational ww = vi.normSq();
  const Rational vvi = dot(v, vi);
  const Rational denom = vv * ww - vvi.squared();
  return (dot(w, v) * ww - dot(w, vi) * vvi) / denom;
}

// Intersection parameter of the axis with a plane; requires n.v != 0.
Rational planeAxisParam(const Line3& axis, const Plane3& pl) {
  const Rational num = pl.a() * axis.anchor().x + pl.b() * axis.anchor().y +
                       pl.c() * axis.anchor().z + pl.d();
  return -num / dot(pl.normal(), axis.direction());
}

}  // namespace

std::vector<ConfigReport> detectPlaneConeCylinderAll(std::span<const Point3> points,
                                                     std::span<const Plane3> planes, std::size_t s,
                                                     std::size_t t) {
  if (s < 2 || t < 2) throw std::invalid_argument("detectPlaneConeCylinder: s, t must be >= 2");
  std::vector<ConfigReport> reports;
  const std::size_t axisThreshold = std::max<std::size_t>(s, 2);
  for (const auto& axis : richLines<Point3, Line3>(points, axisThreshold)) {
    const Vec3& v = axis.line.direction();
    // Cylinder: planes parallel to the axis at one common positive distance.
    std::map<Rational, std::vector<std::size_t>> byDist;
    // Cone: planes through one common axis point at one common angle.
    std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> byApexAngle;
    for (std::size_t i = 0; i < planes.size(); ++i) {
      if (dot(planes[i].normal(), v).isZero()) {
        const Rational d2 = distSq(axis.line.anchor(), planes[i]).d2;
        if (!d2.isZero()) byDist[d2].push_back(i);
      } else {
        const Rational tau = planeAxisParam(axis.line, planes[i]);
        const Rational angle = cosSqAngle(planes[i].normal(), v);
        byApexAngle[{tau, angle}].push_back(i);
      }
    }
    auto emit = [&](ConfigKind kind, std::vector<std::size_t> group) {
      ConfigReport report;
      report.kind = kind;
      report.axis3 = axis.line;
      report.pointMembers = axis.members;
      report.objectMembers = std::move(group);
      report.s = report.pointMembers.size();
      report.t = report.objectMembers.size();
      reports.push_back(std::move(report));
    };
    for (auto& [d2, group] : byDist) {
      if (group.size() >= t) emit(ConfigKind::CylinderPlanes, std::move(group));
    }
    for (auto& [key, group] : byApexAngle) {
      if (group.size() >= t) emit(ConfigKind::ConePlanes, std::move(group));
    }
  }
  return reports;
}

std::optional<ConfigReport> detectPlaneConeCylinder(std::span<const Point3> points,
                                                    std::span<const Plane3> planes, std::size_t s,
                                                    std::size_t t) {
  auto reports = detectPlaneConeCylinderAll(points, planes, s, t);
  if (reports.empty()) return std::nullopt;
  return std::move(reports.front());
}

std::vector<ConfigReport> detectLineConeCylinderHyperboloidAll(std::span<const Point3> points,
                                                               std::span<const Line3> lines,
                                                               std::size_t s, std::size_t t) {
  if (s < 2 || t < 2) {
    throw std::invalid_argument("detectLineConeCylinderHyperboloid: s, t must be >= 2");
  }
  std::vector<ConfigReport> reports;
  const std::size_t axisThreshold = std::max<std::size_t>(s, 2);
  const Rational one(1);
  for (const auto& axis : richLines<Point3, Line3>(points, axisThreshold)) {
    const Vec3& v = axis.line.direction();
    std::map<Rational, std::vector<std::size_t>> cylinder;  // key: dist^2 > 0
    std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> cone;  // (tau, cos^2)
    std::map<std::tuple<Rational, Rational, Rational>, std::vector<std::size_t>>
        hyperboloid;  // (tau, cos^2, dist^2)
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const Rational cos2 = cosSqAngle(lines[i].direction(), v);
      const Rational d2 = distSq(lines[i], axis.line).d2;
      if (cos2 == one) {
        if (!d2.isZero()) cylinder[d2].push_back(i);
        continue;
      }
      const Rational tau = perpendicularFoot(axis.line, lines[i]);
      if (d2.isZero()) {
        cone[{tau, cos2}].push_back(i);
      } else if (cos2.sign() > 0) {
        hyperboloid[{tau, cos2, d2}].push_back(i);
      }
    }
    auto emit = [&](ConfigKind kind, std::vector<std::size_t> group) {
      ConfigReport report;
      report.kind = kind;
      report.axis3 = axis.line;
      report.pointMembers = axis.members;
      report.objectMembers = std::move(group);
      report.s = report.pointMembers.size();
      report.t = report.objectMembers.size();
      reports.push_back(std::move(report));
    };
    for (auto& [key, group] : cylinder) {
      if (group.size() >= t) emit(ConfigKind::CylinderLines, std::move(group));
    }
    for (auto& [key, group] : cone) {
      if (group.size() >= t) emit(ConfigKind::ConeLines, std::move(group));
    }
    for (auto& [key, group] : hyperboloid) {
      if (group.size() >= t) emit(ConfigKind::HyperboloidLines, std::move(group));
    }
  }
  return reports;
}

std::optional<ConfigReport> detectLineConeCylinderHyperboloid(std::span<const Point3> points,
                                                              std::span<const Line3> lines,
                                                              std::size_t s, std::size_t t) {
  auto reports = detectLineConeCylinderHyperboloidAll(points, lines, s, t);
  if (reports.empty()) return std::nullopt;
  return std::move(reports.front());
}

std::optional<ConfigReport> detectCollinearSphereCenters(std::span<const Sphere3> spheres,
                                                         std::size_t k) {
  if (k < 3) throw std::invalid_argument("detectCollinearSphereCenters: k must be at least 3");
  std::vector<Point3> centers;
  centers.reserve(spheres.size());
  for (const Sphere3& s : spheres) centers.push_back(s.center());
  auto found = detectCollinear(std::span<const Point3>(centers), k);
  if (!found) return std::nullopt;
  found->kind = ConfigKind::CollinearSphereCenters;
  return found;
}

bool verifyReport(const ConfigReport& report, const Scene& scene) {
  const auto pointOk = [&](std::size_t i) { return i < scene.points3.size(); };
  switch (report.kind) {
    case ConfigKind::Collinear: {
      if (!report.axis3) {
        if (!report.axis2) return false;
        for (std::size_t i : report.pointMembers) {
          if (i >= scene.points2.size() || !incident(scene.points2[i], *report.axis2)) return false;
        }
        return report.pointMembers.size() >= 3;
      }
      for (std::size_t i : report.pointMembers) {
        if (!pointOk(i) || !incident(scene.points3[i], *report.axis3)) return false;
      }
      return report.pointMembers.size() >= 3;
    }
    case ConfigKind::CollinearSphereCenters: {
      if (!report.axis3) return false;
      for (std::size_t i : report.pointMembers) {
        if (i >= scene.spheres3.size() || !incident(scene.spheres3[i].center(), *report.axis3)) {
          return false;
        }
      }
      return report.pointMembers.size() >= 3;
    }
    case ConfigKind::CylinderPlanes:
    case ConfigKind::ConePlanes: {
      if (!report.axis3 || report.objectMembers.empty()) return false;
      for (std::size_t i : report.pointMembers) {
        if (!pointOk(i) || !incident(scene.points3[i], *report.axis3)) return false;
      }
      const Vec3& v = report.axis3->direction();
      const Plane3& first = scene.planes3.at(report.objectMembers.front());
      if (report.kind == ConfigKind::CylinderPlanes) {
        const Rational d2 = distSq(report.axis3->anchor(), first).d2;
        if (d2.isZero()) return false;
        for (std::size_t i : report.objectMembers) {
          const Plane3& pl = scene.planes3.at(i);
          if (!dot(pl.normal(), v).isZero()) return false;
          if (distSq(report.axis3->anchor(), pl).d2 != d2) return false;
        }
      } else {
        if (dot(first.normal(), v).isZero()) return false;
        const Rational tau = planeAxisParam(*report.axis3, first);
        const Rational angle = cosSqAngle(first.normal(), v);
        for (std::size_t i : report.objectMembers) {
          const Plane3& pl = scene.planes3.at(i);
          if (dot(pl.normal(), v).isZero()) return false;
          if (planeAxisParam(*report.axis3, pl) != tau) return false;
          if (cosSqAngle(pl.normal(), v) != angle) return false;
        }
      }
      return true;
    }
    case ConfigKind::CylinderLines:
    case ConfigKind::ConeLines:
    case ConfigKind::HyperboloidLines: {
      if (!report.axis3 || report.objectMembers.empty()) return false;
      for (std::size_t i : report.pointMembers) {
        if (!pointOk(i) || !incident(scene.points3[i], *report.axis3)) return false;
      }
      const Vec3& v = report.axis3->direction();
      const Line3& first = scene.lines3.at(report.objectMembers.front());
      const Rational one(1);
      if (report.kind == ConfigKind::CylinderLines) {
        const Rational d2 = distSq(first, *report.axis3).d2;
        if (d2.isZero()) return false;
        for (std::size_t i : report.objectMembers) {
          const Line3& l = scene.lines3.at(i);
          if (cosSqAngle(l.direction(), v) != one) return false;
          if (distSq(l, *report.axis3).d2 != d2) return false;
        }
        return true;
      }
      if (cosSqAngle(first.direction(), v) == one) return false;
      const Rational tau = perpendicularFoot(*report.axis3, first);
      const Rational angle = cosSqAngle(first.direction(), v);
      const Rational d2 = distSq(first, *report.axis3).d2;
      if (report.kind == ConfigKind::ConeLines && !d2.isZero()) return false;
      if (report.kind == ConfigKind::HyperboloidLines && (d2.isZero() || angle.isZero())) {
        return false;
      }
      for (std::size_t i : report.objectMembers) {
        const Line3& l = scene.lines3.at(i);
        if (cosSqAngle(l.direction(), v) == one) return false;
        if (perpendicularFoot(*report.axis3, l) != tau) return false;
        if (cosSqAngle(l.direction(), v) != angle) return false;
        if (distSq(l, *report.axis3).d2 != d2) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace distlab
