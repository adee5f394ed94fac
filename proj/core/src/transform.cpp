#include "distlab/transform.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace distlab {

std::vector<RationalAngle> pythagoreanAngles(std::size_t count) {
  struct Triple {
    long a, b, h;
  };
  std::vector<Triple> triples;
  // (u,v) coprime, opposite parity, u > v >= 1 generates every primitive
  // triple (u^2-v^2, 2uv, u^2+v^2) exactly once.
  for (long u = 2; triples.size() < count && u < 4096; ++u) {
    for (long v = 1; v < u; ++v) {
      if ((u - v) % 2 == 0) continue;
      if (std::gcd(u, v) != 1) continue;
      triples.push_back({u * u - v * v, 2 * u * v, u * u + v * v});
    }
  }
  if (triples.size() < count) throw std::length_error("pythagoreanAngles: table exhausted");
  std::sort(triples.begin(), triples.end(), [](const Triple& x, const Triple& y) {
    if (x.h != y.h) return x.h < y.h;
    return x.a < y.a;
  });
  std::vector<RationalAngle> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({Rational(triples[i].a, triples[i].h), Rational(triples[i].b, triples[i].h)});
  }
  return out;
}

Point2 apply(const Isometry2& iso, const Point2& p) {
  return {iso.rot.cos * p.x - iso.rot.sin * p.y + iso.tx,
          iso.rot.sin * p.x + iso.rot.cos * p.y + iso.ty};
}

Line2 apply(const Isometry2& iso, const Line2& l) {
  // Normals rotate with the points; the offset absorbs the translation.
  const Rational a = iso.rot.cos * l.a() - iso.rot.sin * l.b();
  const Rational b = iso.rot.sin * l.a() + iso.rot.cos * l.b();
  return Line2(a, b, l.c() - a * iso.tx - b * iso.ty);
}

Circle2 apply(const Isometry2& iso, const Circle2& c) {
  return Circle2(apply(iso, c.center()), c.r2());
}

Mat3 Mat3::identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = Rational(i == j ? 1 : 0);
  return r;
}

Mat3 Mat3::rotationX(const RationalAngle& a) {
  Mat3 r = identity();
  r.m[1][1] = a.cos;
  r.m[1][2] = -a.sin;
  r.m[2][1] = a.sin;
  r.m[2][2] = a.cos;
  return r;
}

Mat3 Mat3::rotationY(const RationalAngle& a) {
  Mat3 r = identity();
  r.m[0][0] = a.cos;
  r.m[0][2] = a.sin;
  r.m[2][0] = -a.sin;
  r.m[2][2] = a.cos;
  return r;
}

Mat3 Mat3::rotationZ(const RationalAngle& a) {
  Mat3 r = identity();
  r.m[0][0] = a.cos;
  r.m[0][1] = -a.sin;
  r.m[1][0] = a.sin;
  r.m[1][1] = a.cos;
  return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
    }
  }
  return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Point3 apply(const Isometry3& iso, const Point3& p) {
  const Vec3 v = iso.rot * asVec(p) + iso.t;
  return {v.x, v.y, v.z};
}

Plane3 apply(const Isometry3& iso, const Plane3& pl) {
  const Vec3 n = iso.rot * pl.normal();
  return Plane3(n.x, n.y, n.z, pl.d() - dot(n, iso.t));
}

Line3 apply(const Isometry3& iso, const Line3& l) {
  return Line3(apply(iso, l.anchor()), iso.rot * l.direction());
}

Sphere3 apply(const Isometry3& iso, const Sphere3& s) {
  return Sphere3(apply(iso, s.center()), s.r2());
}

}  // namespace distlab
