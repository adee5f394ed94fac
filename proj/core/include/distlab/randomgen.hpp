#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "distlab/geometry2d.hpp"
#include "distlab/geometry3d.hpp"

namespace distlab {

/// Deterministic RNG for scene generation. Draws go through explicit modular
/// reduction so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  long uniform(long lo, long hi);  // inclusive bounds
  /// Rational with |numerator| <= height and 1 <= denominator <= height.
  Rational rational(long height);
  /// Positive rational with numerator, denominator in [1, height].
  Rational positiveRational(long height);

 private:
  std::mt19937_64 eng_;
};

Point2 randomPoint2(Rng& rng, long height);
Line2 randomLine2(Rng& rng, long height);
Circle2 randomCircle2(Rng& rng, long height);
Point3 randomPoint3(Rng& rng, long height);
Plane3 randomPlane3(Rng& rng, long height);
Line3 randomLine3(Rng& rng, long height);
Sphere3 randomSphere3(Rng& rng, long height);

/// Circle centered at a random point whose squared radius is the exact
/// squared distance to `l`, hence tangent by construction.
Circle2 randomCircleTangentTo(Rng& rng, const Line2& l, long height);
Sphere3 randomSphereTangentTo(Rng& rng, const Plane3& pl, long height);
Sphere3 randomSphereTangentTo(Rng& rng, const Line3& l, long height);

/// Pair of tangent circles: both radii are exact rational squares, so the
/// center distance r1 +- r2 is rational and the pair can be laid out along
/// a Pythagorean direction.
std::pair<Circle2, Circle2> randomTangentCirclePair(Rng& rng, long height, bool external);

}  // namespace distlab
