#include "distlab/geometry2d.hpp"

#include <array>
#include <stdexcept>

#include "canonical_coeffs.hpp"

namespace distlab {

Line2::Line2(const Rational& a, const Rational& b, const Rational& c) : a_(a), b_(b), c_(c) {
  if (a_.isZero() && b_.isZero()) throw std::invalid_argument("Line2: zero normal");
  std::array<Rational, 3> v{a_, b_, c_};
  detail::canonicalizeCoeffs(v);
  a_ = v[0];
  b_ = v[1];
  c_ = v[2];
}

Line2 Line2::through(const Point2& p, const Point2& q) {
  if (p == q) throw std::invalid_argument("Line2::through: coincident points");
  // Normal is the rotated direction (dy, -dx).
  const Rational dx = q.x - p.x;
  const Rational dy = q.y - p.y;
  return Line2(dy, -dx, dx * p.y - dy * p.x);
}

bool operator<(const Line2& l, const Line2& r) {
  if (l.a_ != r.a_) return l.a_ < r.a_;
  if (l.b_ != r.b_) return l.b_ < r.b_;
  return l.c_ < r.c_;
}

Circle2::Circle2(Point2 center, Rational r2) : center_(std::move(center)), r2_(std::move(r2)) {
  if (r2_.sign() <= 0) throw std::invalid_argument("Circle2: squared radius must be positive");
}

DistKey distSq(const Point2& p, const Point2& q) {
  return DistKey{(p.x - q.x).squared() + (p.y - q.y).squared()};
}

DistKey distSq(const Point2& p, const Line2& l) {
  const Rational v = l.a() * p.x + l.b() * p.y + l.c();
  return DistKey{v.squared() / (l.a().squared() + l.b().squared())};
}

bool incident(const Point2& p, const Line2& l) {
  return (l.a() * p.x + l.b() * p.y + l.c()).isZero();
}

bool incident(const Point2& p, const Circle2& c) {
  return distSq(p, c.center()).d2 == c.r2();
}

bool tangent(const Line2& l, const Circle2& c) {
  return distSq(c.center(), l).d2 == c.r2();
}

CircleTangency tangency(const Circle2& c1, const Circle2& c2) {
  if (c1 == c2) throw std::invalid_argument("tangency: identical circles");
  const Rational d2 = distSq(c1.center(), c2.center()).d2;
  const Rational D = d2 - c1.r2() - c2.r2();
  if (D.squared() != Rational(4) * c1.r2() * c2.r2()) return CircleTangency::None;
  return D.isNegative() ? CircleTangency::Internal : CircleTangency::External;
}

Point2 tangencyPoint(const Line2& l, const Circle2& c) {
  if (!tangent(l, c)) throw std::invalid_argument("tangencyPoint: line not tangent to circle");
  const Rational n2 = l.a().squared() + l.b().squared();
  const Rational t = (l.a() * c.center().x + l.b() * c.center().y + l.c()) / n2;
  return Point2{c.center().x - t * l.a(), c.center().y - t * l.b()};
}

Point2 tangencyPoint(const Circle2& c1, const Circle2& c2) {
  const CircleTangency kind = tangency(c1, c2);
  if (kind == CircleTangency::None) throw std::invalid_argument("tangencyPoint: circles not tangent");
  const Rational d2 = distSq(c1.center(), c2.center()).d2;
  const Rational D = (d2 - c1.r2() - c2.r2()).abs();
  // rho = r1/r2 = 2*r1^2 / |D|; the point divides the center segment in
  // ratio r1 : r2 (external) or r1 : -r2 (internal).
  const Rational rho = (Rational(2) * c1.r2()) / D;
  const Rational t = kind == CircleTangency::External ? rho / (rho + 1) : rho / (rho - 1);
  return Point2{c1.center().x + t * (c2.center().x - c1.center().x),
                c1.center().y + t * (c2.center().y - c1.center().y)};
}

}  // namespace distlab
