#pragma once

#include <cstddef>
#include <functional>

#include "distlab/rational.hpp"

namespace distlab {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  friend bool operator<(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/// Locus a*x + b*y + c = 0, stored canonical: coprime integer coefficients
/// with the first nonzero of (a, b, c) positive. Two descriptions of the
/// same line compare equal.
class Line2 {
 public:
  Line2(const Rational& a, const Rational& b, const Rational& c);
  static Line2 through(const Point2& p, const Point2& q);
  static Line2 horizontal(const Rational& y0) { return Line2(0, 1, -y0); }
  static Line2 vertical(const Rational& x0) { return Line2(1, 0, -x0); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  bool isVertical() const { return b_.isZero(); }

  friend bool operator==(const Line2& l, const Line2& r) { return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_; }
  friend bool operator!=(const Line2& l, const Line2& r) { return !(l == r); }
  friend bool operator<(const Line2& l, const Line2& r);

 private:
  Rational a_, b_, c_;
};

/// Circle with exact center and squared radius. Radii arising as point-line
/// distances are irrational in general, so the squared form is the only
/// representation that keeps the whole pipeline rational. r2 > 0 is enforced
/// at construction.
class Circle2 {
 public:
  Circle2(Point2 center, Rational r2);

  const Point2& center() const { return center_; }
  const Rational& r2() const { return r2_; }

  friend bool operator==(const Circle2& a, const Circle2& b) { return a.center_ == b.center_ && a.r2_ == b.r2_; }
  friend bool operator!=(const Circle2& a, const Circle2& b) { return !(a == b); }
  friend bool operator<(const Circle2& a, const Circle2& b) {
    if (!(a.center_ == b.center_)) return a.center_ < b.center_;
    return a.r2_ < b.r2_;
  }

 private:
  Point2 center_;
  Rational r2_;
};

/// Canonical reduced squared distance; the identity of a "distance" in every
/// census. Squaring is a bijection on the nonnegative reals, so two pairs
/// are at equal distance iff their keys are equal.
struct DistKey {
  Rational d2;

  friend bool operator==(const DistKey& a, const DistKey& b) { return a.d2 == b.d2; }
  friend bool operator!=(const DistKey& a, const DistKey& b) { return !(a == b); }
  friend bool operator<(const DistKey& a, const DistKey& b) { return a.d2 < b.d2; }
};

DistKey distSq(const Point2& p, const Point2& q);
DistKey distSq(const Point2& p, const Line2& l);

bool incident(const Point2& p, const Line2& l);
bool incident(const Point2& p, const Circle2& c);

/// True iff the perpendicular distance from the center equals the radius.
bool tangent(const Line2& l, const Circle2& c);

enum class CircleTangency { None, External, Internal };

/// Classified by the sign technique on D = d^2 - r1^2 - r2^2: the circles are
/// tangent iff D^2 = 4 r1^2 r2^2, externally when D >= 0 and internally when
/// D < 0. Throws on identical circles.
CircleTangency tangency(const Circle2& c1, const Circle2& c2);

/// Foot of the perpendicular from the center onto a tangent line.
Point2 tangencyPoint(const Line2& l, const Circle2& c);

/// The unique common point of two tangent circles. Rational because at
/// tangency r1/r2 = 2*r1^2/|D| is certified rational.
Point2 tangencyPoint(const Circle2& c1, const Circle2& c2);

}  // namespace distlab

template <>
struct std::hash<distlab::Point2> {
  std::size_t operator()(const distlab::Point2& p) const {
    return distlab::hashCombine(p.x.hash(), p.y.hash());
  }
};

template <>
struct std::hash<distlab::Line2> {
  std::size_t operator()(const distlab::Line2& l) const {
    return distlab::hashCombine(distlab::hashCombine(l.a().hash(), l.b().hash()), l.c().hash());
  }
};

template <>
struct std::hash<distlab::Circle2> {
  std::size_t operator()(const distlab::Circle2& c) const {
    return distlab::hashCombine(std::hash<distlab::Point2>()(c.center()), c.r2().hash());
  }
};

template <>
struct std::hash<distlab::DistKey> {
  std::size_t operator()(const distlab::DistKey& k) const { return k.d2.hash(); }
};
