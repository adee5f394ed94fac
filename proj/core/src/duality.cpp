#include "distlab/duality.hpp"

#include <vector>

#include "distlab/polynomial.hpp"
#include "distlab/transform.hpp"

namespace distlab {

DualPoint2 dualize(const Line2& l) {
  if (l.isVertical()) {
    throw VerticalObjectError("dualize: vertical line has no (a,b) dual; pre-rotate the scene");
  }
  return {-l.a() / l.b(), -l.c() / l.b()};
}

std::pair<DualHyperbola, DualHyperbola> dualize(const Circle2& c) {
  return {DualHyperbola{c.center().x, c.center().y, c.r2(), Branch::Upper},
          DualHyperbola{c.center().x, c.center().y, c.r2(), Branch::Lower}};
}

bool onDualHyperbola(const DualPoint2& q, const DualHyperbola& h) {
  // (p2 - p1*a - b)^2 - r^2 (1 + a^2) = 0; the sign of the inner linear form
  // separates the branches (negative = b above the midline = tangent from
  // above).
  const Rational w = h.p2 - h.p1 * q.a - q.b;
  if (w.squared() != h.r2 * (Rational(1) + q.a.squared())) return false;
  return h.branch == Branch::Upper ? w.isNegative() : w.sign() > 0;
}

Point3 dualize(const Plane3& pl) {
  if (pl.isVertical()) {
    throw VerticalObjectError("dualize: vertical plane has no slope dual; pre-rotate the scene");
  }
  return {-pl.a() / pl.c(), -pl.b() / pl.c(), -pl.d() / pl.c()};
}

DualQuadric3 dualize(const Sphere3& s) {
  return {s.center().x, s.center().y, s.center().z, s.r2()};
}

bool onDualQuadric(const Point3& p, const DualQuadric3& q) {
  const Rational w = q.z - q.x * p.x - q.y * p.y - p.z;
  return w.squared() == q.r2 * (Rational(1) + p.x.squared() + p.y.squared());
}

std::pair<ConeLift, ConeLift> liftToCones(const Circle2& c) {
  return {ConeLift{c.center().x, c.center().y, c.r2(), ConeSign::Plus},
          ConeLift{c.center().x, c.center().y, c.r2(), ConeSign::Minus}};
}

bool onCone(const Point3& p, const ConeLift& k) {
  // E = (x-a)^2+(y-b)^2 - z^2 - r^2 must equal +-2 z r; square and keep the
  // sign constraint (Plus cone: E and z share a sign).
  const Rational E = (p.x - k.a).squared() + (p.y - k.b).squared() - p.z.squared() - k.r2;
  if (E.squared() != Rational(4) * p.z.squared() * k.r2) return false;
  const Rational ez = E * p.z;
  return k.sign == ConeSign::Plus ? ez.sign() >= 0 : ez.sign() <= 0;
}

bool liftOnCone(const Circle2& source, const ConeLift& k) {
  // Lift point is (a1, b1, r1) with z = r1 > 0; substituting z^2 = r1^2
  // turns E into D = d^2 - r1^2 - r2^2 and the sign constraint into the
  // external/internal split.
  const Rational d2 = (source.center().x - k.a).squared() + (source.center().y - k.b).squared();
  const Rational D = d2 - source.r2() - k.r2;
  if (D.squared() != Rational(4) * source.r2() * k.r2) return false;
  return k.sign == ConeSign::Plus ? D.sign() >= 0 : D.sign() <= 0;
}

SpherePoint4 lift4(const Sphere3& s) {
  return {s.center().x, s.center().y, s.center().z, s.r2()};
}

LineParaboloid4 toParaboloid(const Line3& l) {
  return {l.anchor(), l.direction()};
}

bool onParaboloid(const SpherePoint4& p, const LineParaboloid4& v) {
  const Vec3 w = Vec3{p.a, p.b, p.c} - asVec(v.anchor);
  return p.r2 * v.dir.normSq() == cross(w, v.dir).normSq();
}

namespace {

bool rotationIsGeneric(const Scene& s, const RationalAngle& ang) {
  for (const Line2& l : s.lines2) {
    // Rotated b-coefficient: sin*a + cos*b.
    if ((ang.sin * l.a() + ang.cos * l.b()).isZero()) return false;
  }
  return true;
}

bool rotationIsGeneric3(const Scene& s, const Mat3& rot) {
  for (const Plane3& pl : s.planes3) {
    const Vec3 n = rot * pl.normal();
    if (n.z.isZero()) return false;
  }
  return true;
}

}  // namespace

Scene rotateToGeneric(const Scene& s) {
  Scene out = s;

  if (!s.lines2.empty()) {
    RationalAngle chosen{1, 0};
    if (!rotationIsGeneric(s, chosen)) {
      // Each line forbids one angle mod pi, so a family barely larger than
      // the line count always contains a good one.
      const auto angles = pythagoreanAngles(2 * s.lines2.size() + 4);
      bool found = false;
      for (const RationalAngle& a : angles) {
        if (rotationIsGeneric(s, a)) {
          chosen = a;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("rotateToGeneric: no Pythagorean angle available");
    }
    if (!(chosen.cos == Rational(1))) {
      const Isometry2 iso = Isometry2::rotation(chosen);
      for (auto& p : out.points2) p = apply(iso, p);
      for (auto& l : out.lines2) l = apply(iso, l);
      for (auto& c : out.circles2) c = apply(iso, c);
    }
  }

  if (!s.planes3.empty()) {
    Mat3 chosen = Mat3::identity();
    if (!rotationIsGeneric3(s, chosen)) {
      const auto angles = pythagoreanAngles(2 * s.planes3.size() + 8);
      bool found = false;
      // Rx * Rz mixes every normal into the z-slot for some angle pair.
      for (const RationalAngle& ax : angles) {
        for (const RationalAngle& az : angles) {
          const Mat3 rot = Mat3::rotationX(ax) * Mat3::rotationZ(az);
          if (rotationIsGeneric3(s, rot)) {
            chosen = rot;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) throw std::logic_error("rotateToGeneric: no 3D rotation available");
      const Isometry3 iso{chosen, Vec3{0, 0, 0}};
      for (auto& p : out.points3) p = apply(iso, p);
      for (auto& pl : out.planes3) pl = apply(iso, pl);
      for (auto& l : out.lines3) l = apply(iso, l);
      for (auto& sp : out.spheres3) sp = apply(iso, sp);
    }
  }

  return out;
}

int countBranchIntersections(const DualHyperbola& h1, const DualHyperbola& h2) {
  const bool sameCurve = h1.p1 == h2.p1 && h1.p2 == h2.p2 && h1.r2 == h2.r2;
  if (sameCurve) {
    if (h1.branch == h2.branch) {
      throw std::invalid_argument("countBranchIntersections: identical branches");
    }
    return 0;  // opposite branches of one hyperbola are 2*sqrt(R) apart
  }

  // Branch i is b = g_i(a) + s_i sqrt(R_i(a)) with g_i = p2 - p1*a and
  // R_i = r^2 (1 + a^2) > 0. Eliminating the radicals leaves the quartic
  // P = G^2 - 4 R1 R2 with G = R1 + R2 - h^2, h = g1 - g2; each real root
  // belongs to exactly one of the four sign pairings, recovered from the
  // signs of G, h and R1 - R2 at the root.
  const Poly a = Poly::x();
  const Poly one = Poly::constant(1);
  const Poly g1 = Poly::constant(h1.p2) - h1.p1 * a;
  const Poly g2 = Poly::constant(h2.p2) - h2.p1 * a;
  const Poly r1 = h1.r2 * (one + a * a);
  const Poly r2 = h2.r2 * (one + a * a);
  const Poly h = g1 - g2;
  const Poly G = r1 + r2 - h * h;
  const Poly P = G * G - Rational(4) * (r1 * r2);
  if (P.isZero()) {
    // Distinct circles always give a nonzero eliminant.
    throw std::logic_error("countBranchIntersections: degenerate eliminant");
  }

  const int s1 = h1.branch == Branch::Upper ? 1 : -1;
  const int s2 = h2.branch == Branch::Upper ? 1 : -1;
  const Poly D = r1 - r2;

  int count = 0;
  for (const RealRoot& root : isolateRealRoots(P)) {
    const int sG = signAtRoot(root, G);
    const int sh = signAtRoot(root, h);
    if (sG > 0) {
      // Same-sign pairing: s1 sqrt(R1) - s2 sqrt(R2) = -h with s1 = s2.
      if (s1 != s2) continue;
      const int sD = signAtRoot(root, D);
      if (sh == 0 && sD == 0) {
        ++count;
      } else if (sh != 0 && sD != 0 && sD * s1 == -sh) {
        ++count;
      }
    } else if (sG < 0) {
      // Opposite-sign pairing: s1 (sqrt(R1) + sqrt(R2)) = -h.
      if (s1 != -s2) continue;
      if (sh != 0 && s1 == -sh) ++count;
    }
    // sG == 0 cannot happen at a root of P: it would force R1 R2 = 0.
  }
  return count;
}

}  // namespace distlab
