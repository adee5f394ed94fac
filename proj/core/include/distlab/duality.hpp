#pragma once

#include <stdexcept>
#include <utility>

#include "distlab/geometry2d.hpp"
#include "distlab/geometry3d.hpp"
#include "distlab/scene.hpp"

namespace distlab {

/// Raised when a vertical line (or plane) reaches a dualization that needs
/// the explicit-slope form. Pre-rotate the scene (rotateToGeneric) first.
struct VerticalObjectError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dual of the non-vertical line y = a*x + b.
struct DualPoint2 {
  Rational a;
  Rational b;
};

enum class Branch { Upper, Lower };

/// One branch of the dual curve of a circle: the locus of (a, b) dual to the
/// lines tangent to the circle from one side. Upper = tangent from above
/// (the branch with b above the midline p2 - p1*a).
struct DualHyperbola {
  Rational p1;
  Rational p2;
  Rational r2;
  Branch branch;
};

enum class ConeSign { Plus, Minus };

/// The cone (x-a)^2 + (y-b)^2 = (z +- r)^2 over a source circle, kept in
/// the squared form so r never appears unsquared.
struct ConeLift {
  Rational a;
  Rational b;
  Rational r2;
  ConeSign sign;
};

/// Dual quadric of a sphere: (z - a*x - b*y - c)^2 - r^2(1+a^2+b^2) = 0 over
/// dual plane coordinates (a, b, c); a two-sheeted hyperboloid.
struct DualQuadric3 {
  Rational x;
  Rational y;
  Rational z;
  Rational r2;
};

/// R^4 image of a sphere: (center, r^2).
struct SpherePoint4 {
  Rational a;
  Rational b;
  Rational c;
  Rational r2;
};

/// R^4 paraboloid of a line: r^2 * |v|^2 = |((a,b,c) - u) x v|^2.  The
/// direction is kept unnormalized with |v|^2 folded into the equation, since
/// a rational line rarely has a rational unit vector.
struct LineParaboloid4 {
  Point3 anchor;
  Vec3 dir;
};

DualPoint2 dualize(const Line2& l);  // throws VerticalObjectError
std::pair<DualHyperbola, DualHyperbola> dualize(const Circle2& c);  // (Upper, Lower)
bool onDualHyperbola(const DualPoint2& q, const DualHyperbola& h);

Point3 dualize(const Plane3& pl);  // throws VerticalObjectError
DualQuadric3 dualize(const Sphere3& s);
bool onDualQuadric(const Point3& p, const DualQuadric3& q);

std::pair<ConeLift, ConeLift> liftToCones(const Circle2& c);  // (Plus, Minus)
/// Exact incidence of a rational point with a cone, via the squared and
/// sign-annotated form of (x-a)^2+(y-b)^2 = (z +- r)^2.
bool onCone(const Point3& p, const ConeLift& k);
/// Incidence of the lift point (a, b, r) of `source` with a cone, evaluated
/// symbolically in r^2 so irrational lift heights never materialize.
bool liftOnCone(const Circle2& source, const ConeLift& k);

SpherePoint4 lift4(const Sphere3& s);
LineParaboloid4 toParaboloid(const Line3& l);
bool onParaboloid(const SpherePoint4& p, const LineParaboloid4& v);

/// Applies an exact Pythagorean rotation chosen so that no 2D line is
/// vertical and no 3D plane has a zero z-coefficient. Distances are
/// preserved exactly.
Scene rotateToGeneric(const Scene& s);

/// Number of intersection points of two dual hyperbola branches, decided by
/// exact real-root counting on the eliminated quartic plus branch-side sign
/// conditions. Throws on identical branches (infinite intersection).
int countBranchIntersections(const DualHyperbola& h1, const DualHyperbola& h2);

}  // namespace distlab
