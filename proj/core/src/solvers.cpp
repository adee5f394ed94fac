#include "distlab/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace distlab {

namespace {

constexpr double kLinearTol = 1e-9;
constexpr double kApolloniusTol = 1e-8;

double inputScale(std::initializer_list<double> magnitudes) {
  double s = 1.0;
  for (double m : magnitudes) s = std::max(s, std::abs(m));
  return s;
}

// Exact comparison of d^2 with (r1 + r2)^2 without leaving the rationals:
// both reduce to comparing D = d^2 - r1^2 - r2^2 against +-2 r1 r2.
int cmpDistVsSumSq(const Rational& d2, const Rational& r1sq, const Rational& r2sq) {
  const Rational D = d2 - r1sq - r2sq;
  if (D.isNegative()) return -1;
  return (D.squared() - Rational(4) * r1sq * r2sq).sign();
}

int cmpDistVsDiffSq(const Rational& d2, const Rational& r1sq, const Rational& r2sq) {
  const Rational D = d2 - r1sq - r2sq;
  if (D.sign() > 0) return 1;
  return (Rational(4) * r1sq * r2sq - D.squared()).sign();
}

double lineResidual(const NumericLine& l, const Circle2& c1, const Circle2& c2, double scale) {
  const double n = std::hypot(l.a, l.b);
  auto defect = [&](const Circle2& c) {
    const double d = std::abs(l.a * c.center().x.toDouble() + l.b * c.center().y.toDouble() + l.c) / n;
    return std::abs(d - std::sqrt(c.r2().toDouble()));
  };
  return std::max(defect(c1), defect(c2)) / scale;
}

}  // namespace

TangentLinesResult commonTangentLines(const Circle2& c1, const Circle2& c2) {
  if (c1 == c2) throw std::invalid_argument("commonTangentLines: identical circles");
  const Rational d2 = distSq(c1.center(), c2.center()).d2;
  const int cmpPlus = cmpDistVsSumSq(d2, c1.r2(), c2.r2());
  const int cmpMinus = cmpDistVsDiffSq(d2, c1.r2(), c2.r2());

  TangentLinesResult result;
  if (cmpPlus > 0) {
    result.exactCount = 4;
  } else if (cmpPlus == 0) {
    result.exactCount = 3;
  } else if (cmpMinus > 0) {
    result.exactCount = 2;
  } else if (cmpMinus == 0) {
    result.exactCount = 1;
  } else {
    result.exactCount = 0;  // nested or concentric
  }
  if (result.exactCount == 0) return result;

  const double x1 = c1.center().x.toDouble(), y1 = c1.center().y.toDouble();
  const double x2 = c2.center().x.toDouble(), y2 = c2.center().y.toDouble();
  const double r1 = std::sqrt(c1.r2().toDouble()), r2 = std::sqrt(c2.r2().toDouble());
  const double d = std::hypot(x2 - x1, y2 - y1);
  const double ux = (x1 - x2) / d, uy = (y1 - y2) / d;
  const double scale = inputScale({x1, y1, x2, y2, r1, r2});

  // Unit normal n satisfies n.(c1 - c2) = kappa with kappa = r1 - r2 for the
  // external pair and r1 + r2 for the internal pair; the exact comparisons
  // above say which radicals vanish.
  auto emit = [&](double kappa, int copies) {
    const double k = kappa / d;
    const double disc = copies == 1 ? 0.0 : std::sqrt(std::max(0.0, 1.0 - k * k));
    for (int sigma = 0; sigma < copies; ++sigma) {
      const double sg = copies == 1 ? 0.0 : (sigma == 0 ? disc : -disc);
      NumericLine line;
      line.a = k * ux - sg * uy;
      line.b = k * uy + sg * ux;
      line.c = r1 - (line.a * x1 + line.b * y1);
      line.residual = lineResidual(line, c1, c2, scale);
      result.lines.push_back(line);
    }
  };
  // External tangents exist iff d^2 >= (r1-r2)^2, internal iff d^2 >= (r1+r2)^2.
  if (cmpMinus > 0) {
    emit(r1 - r2, 2);
  } else if (cmpMinus == 0) {
    emit(r1 - r2, 1);
  }
  if (cmpPlus > 0) {
    emit(r1 + r2, 2);
  } else if (cmpPlus == 0) {
    emit(r1 + r2, 1);
  }
  return result;
}

namespace {

struct Lin3 {
  // Row: ax*x + ay*y + ar*r = rhs.
  double ax, ay, ar, rhs;
};

// Gaussian elimination with partial pivoting for the 3x3 systems below.
bool solve3(std::array<Lin3, 3> rows, double out[3]) {
  double m[3][4];
  for (int i = 0; i < 3; ++i) {
    m[i][0] = rows[i].ax;
    m[i][1] = rows[i].ay;
    m[i][2] = rows[i].ar;
    m[i][3] = rows[i].rhs;
  }
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (std::abs(m[pivot][col]) < 1e-12) return false;
    std::swap_ranges(m[col], m[col] + 4, m[pivot]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  for (int i = 0; i < 3; ++i) out[i] = m[i][3] / m[i][i];
  return true;
}

}  // namespace

ThreeLineCirclesResult tangentCirclesToThreeLines(const Line2& l1, const Line2& l2,
                                                  const Line2& l3) {
  if (l1 == l2 || l1 == l3 || l2 == l3) {
    throw std::invalid_argument("tangentCirclesToThreeLines: duplicate line");
  }
  const Line2* lines[3] = {&l1, &l2, &l3};

  // Canonical lines are parallel iff they share the (a, b) part exactly.
  auto parallel = [&](int i, int j) {
    return lines[i]->a() == lines[j]->a() && lines[i]->b() == lines[j]->b();
  };
  const int p12 = parallel(0, 1), p13 = parallel(0, 2), p23 = parallel(1, 2);
  const int parallelPairs = p12 + p13 + p23;

  ThreeLineCirclesResult result;
  if (parallelPairs == 3) {
    result.exactCount = 0;  // all parallel
    return result;
  }
  if (parallelPairs == 0) {
    // Pairwise crossing: concurrent iff the intersection of the first two
    // lies on the third (exact).
    const Rational det = l1.a() * l2.b() - l2.a() * l1.b();
    const Rational ix = (l1.b() * l2.c() - l2.b() * l1.c()) / det;
    const Rational iy = (l2.a() * l1.c() - l1.a() * l2.c()) / det;
    if (incident(Point2{ix, iy}, l3)) {
      result.exactCount = 0;
      return result;
    }
    result.exactCount = 4;
  } else {
    result.exactCount = 2;  // exactly one parallel pair
  }

  // Unit-normalize in doubles and sweep the sign patterns; the invalid
  // patterns surface as singular systems or nonpositive radii.
  double a[3], b[3], c[3];
  double scale = 1.0;
  for (int i = 0; i < 3; ++i) {
    const double av = lines[i]->a().toDouble();
    const double bv = lines[i]->b().toDouble();
    const double cv = lines[i]->c().toDouble();
    const double n = std::hypot(av, bv);
    a[i] = av / n;
    b[i] = bv / n;
    c[i] = cv / n;
    scale = std::max(scale, std::abs(c[i]));
  }

  for (int mask = 0; mask < 4; ++mask) {
    // s1 fixed to +1; (s, -s) describe the same circle.
    const double s[3] = {1.0, mask & 1 ? 1.0 : -1.0, mask & 2 ? 1.0 : -1.0};
    std::array<Lin3, 3> rows;
    for (int i = 0; i < 3; ++i) rows[i] = {a[i], b[i], -s[i], -c[i]};
    double sol[3];
    if (!solve3(rows, sol)) continue;
    if (!(sol[2] > kLinearTol * scale)) continue;
    NumericCircle circle{sol[0], sol[1], sol[2], 0.0};
    double residual = 0;
    for (int i = 0; i < 3; ++i) {
      const double dist = std::abs(a[i] * circle.cx + b[i] * circle.cy + c[i]);
      residual = std::max(residual, std::abs(dist - circle.r));
    }
    circle.residual = residual / scale;
    result.circles.push_back(circle);
  }
  return result;
}

std::vector<NumericCircle> apollonius(const Circle2& c1, const Circle2& c2, const Circle2& c3) {
  if (c1 == c2 || c1 == c3 || c2 == c3) {
    throw std::invalid_argument("apollonius: duplicate circle");
  }
  // Reject the infinite family: three circles mutually tangent at one point.
  if (tangency(c1, c2) != CircleTangency::None && tangency(c1, c3) != CircleTangency::None &&
      tangency(c2, c3) != CircleTangency::None) {
    const Point2 q12 = tangencyPoint(c1, c2);
    if (q12 == tangencyPoint(c1, c3) && q12 == tangencyPoint(c2, c3)) {
      throw std::invalid_argument("apollonius: circles mutually tangent at a common point");
    }
  }

  const Circle2* cs[3] = {&c1, &c2, &c3};
  double x[3], y[3], r[3];
  double scale = 1.0;
  for (int i = 0; i < 3; ++i) {
    x[i] = cs[i]->center().x.toDouble();
    y[i] = cs[i]->center().y.toDouble();
    r[i] = std::sqrt(cs[i]->r2().toDouble());
    scale = std::max({scale, std::abs(x[i]), std::abs(y[i]), r[i]});
  }

  std::vector<NumericCircle> out;
  auto residualOf = [&](const NumericCircle& cand) {
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      const double d = std::hypot(cand.cx - x[i], cand.cy - y[i]);
      // Tangency means d = |r +- r_i| for one of the signs.
      const double defect = std::min(std::abs(d - std::abs(cand.r + r[i])),
                                     std::abs(d - std::abs(cand.r - r[i])));
      worst = std::max(worst, defect);
    }
    return worst / scale;
  };
  auto alreadyHave = [&](const NumericCircle& cand) {
    for (const NumericCircle& c : out) {
      if (std::abs(c.cx - cand.cx) < 1e-6 * scale && std::abs(c.cy - cand.cy) < 1e-6 * scale &&
          std::abs(c.r - cand.r) < 1e-6 * scale) {
        return true;
      }
    }
    for (int i = 0; i < 3; ++i) {
      if (std::abs(x[i] - cand.cx) < 1e-6 * scale && std::abs(y[i] - cand.cy) < 1e-6 * scale &&
          std::abs(r[i] - cand.r) < 1e-6 * scale) {
        return true;  // Lemma counts *other* circles
      }
    }
    return false;
  };

  for (int mask = 0; mask < 8; ++mask) {
    const double s[3] = {mask & 1 ? 1.0 : -1.0, mask & 2 ? 1.0 : -1.0, mask & 4 ? 1.0 : -1.0};
    // (x - x_i)^2 + (y - y_i)^2 = (rho + s_i r_i)^2; subtracting the first
    // equation leaves two equations linear in (x, y, rho).
    double A[2][3], rhs[2];
    for (int e = 0; e < 2; ++e) {
      const int i = e + 1;
      A[e][0] = 2 * (x[i] - x[0]);
      A[e][1] = 2 * (y[i] - y[0]);
      A[e][2] = 2 * (s[i] * r[i] - s[0] * r[0]);
      rhs[e] = (x[i] * x[i] + y[i] * y[i] - r[i] * r[i]) - (x[0] * x[0] + y[0] * y[0] - r[0] * r[0]);
    }
    // Parametrize the solution line of the 2x3 system by its best-pivot
    // variable, substitute into the first quadric, and solve the quadratic.
    int freeVar = 0;
    double bestMinor = -1;
    for (int f = 0; f < 3; ++f) {
      const int u = f == 0 ? 1 : 0;
      const int v = f == 2 ? 1 : 2;
      const double minor = std::abs(A[0][u] * A[1][v] - A[0][v] * A[1][u]);
      if (minor > bestMinor) {
        bestMinor = minor;
        freeVar = f;
      }
    }
    if (bestMinor < 1e-12) continue;  // rank-deficient pattern (e.g. concentric inputs)
    const int u = freeVar == 0 ? 1 : 0;
    const int v = freeVar == 2 ? 1 : 2;
    const double det = A[0][u] * A[1][v] - A[0][v] * A[1][u];
    // sol[u] = pu0 + pu1 * t, sol[v] = pv0 + pv1 * t, sol[freeVar] = t.
    const double pu0 = (rhs[0] * A[1][v] - rhs[1] * A[0][v]) / det;
    const double pv0 = (A[0][u] * rhs[1] - A[1][u] * rhs[0]) / det;
    const double pu1 = -(A[0][freeVar] * A[1][v] - A[0][v] * A[1][freeVar]) / det;
    const double pv1 = -(A[0][u] * A[1][freeVar] - A[0][freeVar] * A[1][u]) / det;

    double p0[3], p1[3];
    p0[freeVar] = 0;
    p1[freeVar] = 1;
    p0[u] = pu0;
    p1[u] = pu1;
    p0[v] = pv0;
    p1[v] = pv1;

    // (x - x0)^2 + (y - y0)^2 - (rho + s0 r0)^2 = 0 along the line.
    const double ex0 = p0[0] - x[0], ex1 = p1[0];
    const double ey0 = p0[1] - y[0], ey1 = p1[1];
    const double er0 = p0[2] + s[0] * r[0], er1 = p1[2];
    const double qa = ex1 * ex1 + ey1 * ey1 - er1 * er1;
    const double qb = 2 * (ex0 * ex1 + ey0 * ey1 - er0 * er1);
    const double qc = ex0 * ex0 + ey0 * ey0 - er0 * er0;

    std::vector<double> ts;
    if (std::abs(qa) < 1e-14) {
      if (std::abs(qb) > 1e-14) ts.push_back(-qc / qb);
    } else {
      const double disc = qb * qb - 4 * qa * qc;
      if (disc >= 0) {
        const double sq = std::sqrt(disc);
        ts.push_back((-qb + sq) / (2 * qa));
        ts.push_back((-qb - sq) / (2 * qa));
      }
    }
    for (double t : ts) {
      NumericCircle cand;
      cand.cx = p0[0] + p1[0] * t;
      cand.cy = p0[1] + p1[1] * t;
      cand.r = p0[2] + p1[2] * t;
      if (!(cand.r > kApolloniusTol * scale)) continue;
      cand.residual = residualOf(cand);
      if (cand.residual > kApolloniusTol) continue;
      if (alreadyHave(cand)) continue;
      out.push_back(cand);
    }
  }
  if (out.size() > 8) {
    throw std::logic_error("apollonius: more than eight certified solutions");
  }
  return out;
}

}  // namespace distlab
