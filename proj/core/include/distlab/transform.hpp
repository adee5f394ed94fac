#pragma once

#include <cstdint>
#include <vector>

#include "distlab/geometry2d.hpp"
#include "distlab/geometry3d.hpp"

namespace distlab {

/// cos/sin pair with cos^2 + sin^2 = 1, e.g. (3/5, 4/5). Applying one of
/// these is an exact isometry, so every DistKey in a scene is preserved.
struct RationalAngle {
  Rational cos;
  Rational sin;
};

/// First `count` primitive Pythagorean angles (4/5, 12/13, 8/17, ...),
/// ordered by hypotenuse. The identity angle is not included.
std::vector<RationalAngle> pythagoreanAngles(std::size_t count);

struct Isometry2 {
  RationalAngle rot{1, 0};
  Rational tx{0}, ty{0};
  static Isometry2 rotation(const RationalAngle& a) { return {a, 0, 0}; }
};

Point2 apply(const Isometry2& iso, const Point2& p);
Line2 apply(const Isometry2& iso, const Line2& l);
Circle2 apply(const Isometry2& iso, const Circle2& c);

/// Row-major 3x3 rational matrix; orthogonal by construction in this library
/// (products of coordinate-plane rotations by rational angles).
struct Mat3 {
  Rational m[3][3];
  static Mat3 identity();
  static Mat3 rotationX(const RationalAngle& a);
  static Mat3 rotationY(const RationalAngle& a);
  static Mat3 rotationZ(const RationalAngle& a);
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  Vec3 operator*(const Vec3& v) const;
};

struct Isometry3 {
  Mat3 rot = Mat3::identity();
  Vec3 t{0, 0, 0};
};

Point3 apply(const Isometry3& iso, const Point3& p);
Plane3 apply(const Isometry3& iso, const Plane3& pl);
Line3 apply(const Isometry3& iso, const Line3& l);
Sphere3 apply(const Isometry3& iso, const Sphere3& s);

}  // namespace distlab
