#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "distlab/rational.hpp"

namespace distlab {

/// f(x, y) = (x - y)^2 / (1 + y^2): the squared distance from (x, 0) to the
/// line through (y, 0) and (0, 1).
Rational quadrupleF(const Rational& x, const Rational& y);

/// Exact statistics of f over W^2: the value set, the fiber sizes, and the
/// quadruple energy Q = sum of squared fiber sizes. Q * |f(W)| >= |W|^4
/// holds exactly (Cauchy-Schwarz).
struct QuadrupleStats {
  std::size_t k = 0;
  std::set<Rational> fValues;
  std::map<Rational, std::uint64_t> fiberSizes;
  std::uint64_t q = 0;
};

/// Full enumeration of W^2; W must consist of distinct positive rationals.
QuadrupleStats quadrupleStats(std::span<const Rational> w);

enum class QuadSign { Plus, Minus };

/// The line z' = +-A_ij z + (x_j -+ A_ij x_i) with A_ij = sqrt((1+x_j^2)/(1+x_i^2)),
/// kept symbolic: every query about it is answered through squared-and-signed
/// rational tests, so the irrational slope never materializes.
struct SymbolicQuadLine {
  std::size_t i = 0;
  std::size_t j = 0;
  QuadSign sign = QuadSign::Plus;
};

/// All 2k(k-1) symbolic lines over W.
std::vector<SymbolicQuadLine> buildQuadLines(std::span<const Rational> w);

/// Exact incidence of the point (z, z') with a symbolic line.
bool quadLineIncidence(const Rational& z, const Rational& zp, const SymbolicQuadLine& line,
                       std::span<const Rational> w);

/// Exact equality test of two symbolic lines (slope sign, squared slope,
/// intercept through the squared-sign comparison).
bool sameQuadLine(const SymbolicQuadLine& a, const SymbolicQuadLine& b,
                  std::span<const Rational> w);

/// True iff all 2k(k-1) lines over W are pairwise distinct. Groups lines by
/// exact squared slope so only colliding candidates are compared.
bool quadLinesAllDistinct(std::span<const Rational> w);

/// Total number of incidences of W^2 with all symbolic lines.
std::uint64_t quadLineIncidenceTotal(std::span<const Rational> w);

}  // namespace distlab
