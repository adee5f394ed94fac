#pragma once

#include <vector>

#include "distlab/geometry2d.hpp"

namespace distlab {

/// Numeric line a*x + b*y + c = 0 with a^2 + b^2 = 1; residual is the
/// largest relative defect against the defining tangency constraints.
struct NumericLine {
  double a = 0;
  double b = 0;
  double c = 0;
  double residual = 0;
};

/// Numeric circle with certified residual (relative to the input scale).
struct NumericCircle {
  double cx = 0;
  double cy = 0;
  double r = 0;
  double residual = 0;
};

/// Common tangent lines of two distinct circles. The count is decided purely
/// by exact comparisons of d^2 against (r1 +- r2)^2 (the sign technique on
/// D = d^2 - r1^2 - r2^2); only the coordinates are numeric.
///   4 separated | 3 externally tangent | 2 properly intersecting |
///   1 internally tangent | 0 nested or concentric.
struct TangentLinesResult {
  int exactCount = 0;
  std::vector<NumericLine> lines;
};
TangentLinesResult commonTangentLines(const Circle2& c1, const Circle2& c2);

/// Circles tangent to three distinct lines: 4 for a triangle (incircle plus
/// three excircles), 2 when exactly two lines are parallel, 0 when the lines
/// are concurrent or all parallel. Classification exact, coordinates
/// numeric with residual certification.
struct ThreeLineCirclesResult {
  int exactCount = 0;
  std::vector<NumericCircle> circles;
};
ThreeLineCirclesResult tangentCirclesToThreeLines(const Line2& l1, const Line2& l2,
                                                  const Line2& l3);

/// Circles tangent to three given circles, one linear solve per sign
/// pattern. Inputs mutually tangent at a common point are rejected exactly
/// (the solution family is infinite there); outputs exclude the inputs
/// themselves and never exceed eight.
std::vector<NumericCircle> apollonius(const Circle2& c1, const Circle2& c2, const Circle2& c3);

}  // namespace distlab
