#include "distlab/geometry3d.hpp"

#include <array>
#include <stdexcept>

#include "canonical_coeffs.hpp"

namespace distlab {

Rational dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Plane3::Plane3(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (a_.isZero() && b_.isZero() && c_.isZero()) throw std::invalid_argument("Plane3: zero normal");
  std::array<Rational, 4> v{a_, b_, c_, d_};
  detail::canonicalizeCoeffs(v);
  a_ = v[0];
  b_ = v[1];
  c_ = v[2];
  d_ = v[3];
}

bool operator<(const Plane3& l, const Plane3& r) {
  if (l.a_ != r.a_) return l.a_ < r.a_;
  if (l.b_ != r.b_) return l.b_ < r.b_;
  if (l.c_ != r.c_) return l.c_ < r.c_;
  return l.d_ < r.d_;
}

Line3::Line3(const Point3& anchor, const Vec3& direction) : u_(anchor), v_(direction) {
  if (v_.isZero()) throw std::invalid_argument("Line3: zero direction");
  std::array<Rational, 3> d{v_.x, v_.y, v_.z};
  detail::canonicalizeCoeffs(d);
  v_ = Vec3{d[0], d[1], d[2]};
  // Anchor at the point whose pivot coordinate vanishes.
  if (!v_.x.isZero()) {
    const Rational t = -u_.x / v_.x;
    u_ = u_ + t * v_;
  } else if (!v_.y.isZero()) {
    const Rational t = -u_.y / v_.y;
    u_ = u_ + t * v_;
  } else {
    const Rational t = -u_.z / v_.z;
    u_ = u_ + t * v_;
  }
}

Line3 Line3::through(const Point3& p, const Point3& q) {
  if (p == q) throw std::invalid_argument("Line3::through: coincident points");
  return Line3(p, q - p);
}

bool operator<(const Line3& l, const Line3& r) {
  if (!(l.u_ == r.u_)) return l.u_ < r.u_;
  if (l.v_.x != r.v_.x) return l.v_.x < r.v_.x;
  if (l.v_.y != r.v_.y) return l.v_.y < r.v_.y;
  return l.v_.z < r.v_.z;
}

Sphere3::Sphere3(Point3 center, Rational r2) : center_(std::move(center)), r2_(std::move(r2)) {
  if (r2_.sign() <= 0) throw std::invalid_argument("Sphere3: squared radius must be positive");
}

DistKey distSq(const Point3& p, const Point3& q) {
  return DistKey{(p - q).normSq()};
}

DistKey distSq(const Point3& p, const Plane3& pl) {
  const Rational v = pl.a() * p.x + pl.b() * p.y + pl.c() * p.z + pl.d();
  return DistKey{v.squared() / pl.normal().normSq()};
}

DistKey distSq(const Point3& p, const Line3& l) {
  const Vec3 w = p - l.anchor();
  return DistKey{cross(w, l.direction()).normSq() / l.direction().normSq()};
}

DistKey distSq(const Line3& l1, const Line3& l2) {
  const Vec3 n = cross(l1.direction(), l2.direction());
  if (n.isZero()) return distSq(l2.anchor(), l1);
  const Rational t = dot(l2.anchor() - l1.anchor(), n);
  return DistKey{t.squared() / n.normSq()};
}

bool incident(const Point3& p, const Plane3& pl) {
  return (pl.a() * p.x + pl.b() * p.y + pl.c() * p.z + pl.d()).isZero();
}

bool incident(const Point3& p, const Line3& l) {
  return cross(p - l.anchor(), l.direction()).isZero();
}

bool incident(const Point3& p, const Sphere3& s) {
  return distSq(p, s.center()).d2 == s.r2();
}

bool tangent(const Plane3& pl, const Sphere3& s) {
  return distSq(s.center(), pl).d2 == s.r2();
}

bool tangent(const Line3& l, const Sphere3& s) {
  return distSq(s.center(), l).d2 == s.r2();
}

Point3 tangencyPoint(const Plane3& pl, const Sphere3& s) {
  if (!tangent(pl, s)) throw std::invalid_argument("tangencyPoint: plane not tangent to sphere");
  const Vec3 n = pl.normal();
  const Rational t = (dot(n, asVec(s.center())) + pl.d()) / n.normSq();
  return s.center() + (-t) * n;
}

Point3 tangencyPoint(const Line3& l, const Sphere3& s) {
  if (!tangent(l, s)) throw std::invalid_argument("tangencyPoint: line not tangent to sphere");
  const Rational t = dot(s.center() - l.anchor(), l.direction()) / l.direction().normSq();
  return l.at(t);
}

Rational cosSqAngle(const Vec3& a, const Vec3& b) {
  if (a.isZero() || b.isZero()) throw std::invalid_argument("cosSqAngle: zero vector");
  return dot(a, b).squared() / (a.normSq() * b.normSq());
}

}  // namespace distlab
