#include "distlab/quadruples.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace distlab {

Rational quadrupleF(const Rational& x, const Rational& y) {
  return (x - y).squared() / (Rational(1) + y.squared());
}

namespace {

void checkW(std::span<const Rational> w) {
  std::unordered_set<Rational> seen;
  for (const Rational& x : w) {
    if (x.sign() <= 0) throw std::invalid_argument("W must consist of positive rationals");
    if (!seen.insert(x).second) throw std::invalid_argument("W must consist of distinct rationals");
  }
}

}  // namespace

QuadrupleStats quadrupleStats(std::span<const Rational> w) {
  checkW(w);
  QuadrupleStats stats;
  stats.k = w.size();
  std::unordered_map<Rational, std::uint64_t> fibers;
  for (const Rational& x : w) {
    for (const Rational& y : w) {
      ++fibers[quadrupleF(x, y)];
    }
  }
  for (const auto& [value, count] : fibers) {
    stats.fValues.insert(value);
    stats.fiberSizes.emplace(value, count);
    stats.q += count * count;
  }
  return stats;
}

std::vector<SymbolicQuadLine> buildQuadLines(std::span<const Rational> w) {
  checkW(w);
  std::vector<SymbolicQuadLine> lines;
  lines.reserve(2 * w.size() * (w.size() - 1));
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (i == j) continue;
      lines.push_back({i, j, QuadSign::Plus});
      lines.push_back({i, j, QuadSign::Minus});
    }
  }
  return lines;
}

bool quadLineIncidence(const Rational& z, const Rational& zp, const SymbolicQuadLine& line,
                       std::span<const Rational> w) {
  if (line.i == line.j) throw std::invalid_argument("quadLineIncidence: i == j");
  const Rational& xi = w[line.i];
  const Rational& xj = w[line.j];
  // (z' - x_j) = +-A_ij (z - x_i) with A_ij > 0: square for magnitude, then
  // match the sign to the line's.
  const Rational lhs = (zp - xj).squared() * (Rational(1) + xi.squared());
  const Rational rhs = (z - xi).squared() * (Rational(1) + xj.squared());
  if (lhs != rhs) return false;
  const int sl = (zp - xj).sign();
  const int sr = (z - xi).sign();
  return line.sign == QuadSign::Plus ? sl == sr : sl == -sr;
}

namespace {

// Squared slope of a symbolic line: A_ij^2 = (1+x_j^2)/(1+x_i^2).
Rational slopeSq(const SymbolicQuadLine& l, std::span<const Rational> w) {
  return (Rational(1) + w[l.j].squared()) / (Rational(1) + w[l.i].squared());
}

}  // namespace

bool sameQuadLine(const SymbolicQuadLine& a, const SymbolicQuadLine& b,
                  std::span<const Rational> w) {
  if (a.sign != b.sign) return false;  // slopes have opposite signs
  if (a.i == b.i && a.j == b.j) return true;
  if (slopeSq(a, w) != slopeSq(b, w)) return false;
  // Equal slopes s*A; intercepts match iff x_ja - x_jb = s*A (x_ia - x_ib),
  // checked in the squared-and-signed form.
  const Rational dj = w[a.j] - w[b.j];
  const Rational di = w[a.i] - w[b.i];
  if (dj.squared() * (Rational(1) + w[a.i].squared()) !=
      di.squared() * (Rational(1) + w[a.j].squared())) {
    return false;
  }
  const int s = a.sign == QuadSign::Plus ? 1 : -1;
  return dj.sign() == s * di.sign();
}

bool quadLinesAllDistinct(std::span<const Rational> w) {
  const auto lines = buildQuadLines(w);
  // Lines with different (sign, A^2) are distinct outright; only slope-class
  // collisions need the full comparison.
  std::map<std::pair<int, Rational>, std::vector<std::size_t>> bySlope;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const int s = lines[idx].sign == QuadSign::Plus ? 1 : -1;
    bySlope[{s, slopeSq(lines[idx], w)}].push_back(idx);
  }
  for (const auto& [slope, members] : bySlope) {
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        if (sameQuadLine(lines[members[x]], lines[members[y]], w)) return false;
      }
    }
  }
  return true;
}

std::uint64_t quadLineIncidenceTotal(std::span<const Rational> w) {
  const auto lines = buildQuadLines(w);
  std::uint64_t total = 0;
  for (const SymbolicQuadLine& line : lines) {
    for (const Rational& z : w) {
      for (const Rational& zp : w) {
        if (quadLineIncidence(z, zp, line, w)) ++total;
      }
    }
  }
  return total;
}

}  // namespace distlab
