#include "distlab/randomgen.hpp"

#include <stdexcept>

#include "distlab/transform.hpp"

namespace distlab {

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(eng_() % span);
}

Rational Rng::rational(long height) {
  return Rational(uniform(-height, height), uniform(1, height));
}

Rational Rng::positiveRational(long height) {
  return Rational(uniform(1, height), uniform(1, height));
}

Point2 randomPoint2(Rng& rng, long height) {
  return {rng.rational(height), rng.rational(height)};
}

Line2 randomLine2(Rng& rng, long height) {
  for (;;) {
    const Rational a = rng.rational(height);
    const Rational b = rng.rational(height);
    if (a.isZero() && b.isZero()) continue;
    return Line2(a, b, rng.rational(height));
  }
}

Circle2 randomCircle2(Rng& rng, long height) {
  return Circle2(randomPoint2(rng, height), rng.positiveRational(height));
}

Point3 randomPoint3(Rng& rng, long height) {
  return {rng.rational(height), rng.rational(height), rng.rational(height)};
}

Plane3 randomPlane3(Rng& rng, long height) {
  for (;;) {
    const Rational a = rng.rational(height);
    const Rational b = rng.rational(height);
    const Rational c = rng.rational(height);
    if (a.isZero() && b.isZero() && c.isZero()) continue;
    return Plane3(a, b, c, rng.rational(height));
  }
}

Line3 randomLine3(Rng& rng, long height) {
  for (;;) {
    const Vec3 dir{rng.rational(height), rng.rational(height), rng.rational(height)};
    if (dir.isZero()) continue;
    return Line3(randomPoint3(rng, height), dir);
  }
}

Sphere3 randomSphere3(Rng& rng, long height) {
  return Sphere3(randomPoint3(rng, height), rng.positiveRational(height));
}

Circle2 randomCircleTangentTo(Rng& rng, const Line2& l, long height) {
  for (;;) {
    const Point2 center = randomPoint2(rng, height);
    const Rational d2 = distSq(center, l).d2;
    if (d2.isZero()) continue;
    return Circle2(center, d2);
  }
}

Sphere3 randomSphereTangentTo(Rng& rng, const Plane3& pl, long height) {
  for (;;) {
    const Point3 center = randomPoint3(rng, height);
    const Rational d2 = distSq(center, pl).d2;
    if (d2.isZero()) continue;
    return Sphere3(center, d2);
  }
}

Sphere3 randomSphereTangentTo(Rng& rng, const Line3& l, long height) {
  for (;;) {
    const Point3 center = randomPoint3(rng, height);
    const Rational d2 = distSq(center, l).d2;
    if (d2.isZero()) continue;
    return Sphere3(center, d2);
  }
}

std::pair<Circle2, Circle2> randomTangentCirclePair(Rng& rng, long height, bool external) {
  static const auto angles = pythagoreanAngles(64);
  for (;;) {
    const Rational r1 = rng.positiveRational(height);
    const Rational r2 = rng.positiveRational(height);
    if (!external && r1 == r2) continue;
    const Rational d = external ? r1 + r2 : (r1 - r2).abs();
    const RationalAngle& ang = angles[rng.next() % angles.size()];
    const Point2 base = randomPoint2(rng, height);
    const Point2 other{base.x + d * ang.cos, base.y + d * ang.sin};
    return {Circle2(base, r1.squared()), Circle2(other, r2.squared())};
  }
}

}  // namespace distlab
