#pragma once

#include <cstddef>
#include <functional>

#include "distlab/geometry2d.hpp"
#include "distlab/rational.hpp"

namespace distlab {

struct Point3 {
  Rational x;
  Rational y;
  Rational z;

  friend bool operator==(const Point3& a, const Point3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  friend bool operator!=(const Point3& a, const Point3& b) { return !(a == b); }
  friend bool operator<(const Point3& a, const Point3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
};

struct Vec3 {
  Rational x;
  Rational y;
  Rational z;

  bool isZero() const { return x.isZero() && y.isZero() && z.isZero(); }
  Rational normSq() const { return x.squared() + y.squared() + z.squared(); }

  friend bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  friend bool operator!=(const Vec3& a, const Vec3& b) { return !(a == b); }
  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(const Rational& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
};

inline Vec3 operator-(const Point3& p, const Point3& q) { return {p.x - q.x, p.y - q.y, p.z - q.z}; }
inline Point3 operator+(const Point3& p, const Vec3& v) { return {p.x + v.x, p.y + v.y, p.z + v.z}; }
inline Vec3 asVec(const Point3& p) { return {p.x, p.y, p.z}; }

Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

/// Locus a*x + b*y + c*z + d = 0, canonical as Line2: coprime integers,
/// first nonzero of (a, b, c, d) positive. Normal must be nonzero.
class Plane3 {
 public:
  Plane3(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  Vec3 normal() const { return {a_, b_, c_}; }
  /// Vertical in the dualization sense: z-coefficient zero.
  bool isVertical() const { return c_.isZero(); }

  friend bool operator==(const Plane3& l, const Plane3& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }
  friend bool operator!=(const Plane3& l, const Plane3& r) { return !(l == r); }
  friend bool operator<(const Plane3& l, const Plane3& r);

 private:
  Rational a_, b_, c_, d_;
};

/// Line anchor + direction, canonicalized so that equal loci have equal
/// fields: the direction is a primitive integer vector with first nonzero
/// component positive, and the anchor is the point of the line whose
/// pivot coordinate (the direction's first nonzero slot) is zero.
class Line3 {
 public:
  Line3(const Point3& anchor, const Vec3& direction);
  static Line3 through(const Point3& p, const Point3& q);

  const Point3& anchor() const { return u_; }
  const Vec3& direction() const { return v_; }
  Point3 at(const Rational& t) const { return u_ + t * v_; }

  friend bool operator==(const Line3& l, const Line3& r) { return l.u_ == r.u_ && l.v_ == r.v_; }
  friend bool operator!=(const Line3& l, const Line3& r) { return !(l == r); }
  friend bool operator<(const Line3& l, const Line3& r);

 private:
  Point3 u_;
  Vec3 v_;
};

class Sphere3 {
 public:
  Sphere3(Point3 center, Rational r2);

  const Point3& center() const { return center_; }
  const Rational& r2() const { return r2_; }

  friend bool operator==(const Sphere3& a, const Sphere3& b) { return a.center_ == b.center_ && a.r2_ == b.r2_; }
  friend bool operator!=(const Sphere3& a, const Sphere3& b) { return !(a == b); }
  friend bool operator<(const Sphere3& a, const Sphere3& b) {
    if (!(a.center_ == b.center_)) return a.center_ < b.center_;
    return a.r2_ < b.r2_;
  }

 private:
  Point3 center_;
  Rational r2_;
};

DistKey distSq(const Point3& p, const Point3& q);
DistKey distSq(const Point3& p, const Plane3& pl);
DistKey distSq(const Point3& p, const Line3& l);
/// Squared distance between two lines; falls back to point-line distance
/// when the directions are parallel.
DistKey distSq(const Line3& l1, const Line3& l2);

bool incident(const Point3& p, const Plane3& pl);
bool incident(const Point3& p, const Line3& l);
bool incident(const Point3& p, const Sphere3& s);

bool tangent(const Plane3& pl, const Sphere3& s);
bool tangent(const Line3& l, const Sphere3& s);

Point3 tangencyPoint(const Plane3& pl, const Sphere3& s);
Point3 tangencyPoint(const Line3& l, const Sphere3& s);

/// cos^2 of the angle between two directions: (a.b)^2 / (|a|^2 |b|^2).
/// Rational, orientation-free and monotone in the acute angle.
Rational cosSqAngle(const Vec3& a, const Vec3& b);

}  // namespace distlab

template <>
struct std::hash<distlab::Point3> {
  std::size_t operator()(const distlab::Point3& p) const {
    return distlab::hashCombine(distlab::hashCombine(p.x.hash(), p.y.hash()), p.z.hash());
  }
};

template <>
struct std::hash<distlab::Vec3> {
  std::size_t operator()(const distlab::Vec3& v) const {
    return distlab::hashCombine(distlab::hashCombine(v.x.hash(), v.y.hash()), v.z.hash());
  }
};

template <>
struct std::hash<distlab::Plane3> {
  std::size_t operator()(const distlab::Plane3& p) const {
    std::size_t h = distlab::hashCombine(p.a().hash(), p.b().hash());
    return distlab::hashCombine(distlab::hashCombine(h, p.c().hash()), p.d().hash());
  }
};

template <>
struct std::hash<distlab::Line3> {
  std::size_t operator()(const distlab::Line3& l) const {
    return distlab::hashCombine(std::hash<distlab::Point3>()(l.anchor()),
                                std::hash<distlab::Vec3>()(l.direction()));
  }
};

template <>
struct std::hash<distlab::Sphere3> {
  std::size_t operator()(const distlab::Sphere3& s) const {
    return distlab::hashCombine(std::hash<distlab::Point3>()(s.center()), s.r2().hash());
  }
};
