#pragma once

#include <vector>

#include "distlab/rational.hpp"

namespace distlab {

/// Dense univariate polynomial over Rational, coefficient of x^i at index i.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& v) { return Poly({v}); }
  static Poly x() { return Poly({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend Poly operator-(const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; remainder has degree < degree(b). b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);  // monic
  Poly squarefreePart() const;

 private:
  std::vector<Rational> c_;
  void trim();
};

/// Sturm chain for exact real-root counting.
class SturmChain {
 public:
  explicit SturmChain(const Poly& squarefree);
  int signChangesAt(const Rational& x) const;
  int signChangesAtNegInf() const;
  int signChangesAtPosInf() const;
  /// Distinct real roots in the half-open interval (lo, hi].
  int countRoots(const Rational& lo, const Rational& hi) const;
  int countAllRoots() const;

 private:
  std::vector<Poly> seq_;
};

/// The unique real root of the squarefree `p` inside (lo, hi); p(lo) and
/// p(hi) are nonzero.
struct RealRoot {
  Poly p;
  Rational lo;
  Rational hi;
};

/// Isolating intervals for all distinct real roots of p (nonzero).
std::vector<RealRoot> isolateRealRoots(const Poly& p);

/// Exact sign (-1, 0, +1) of A evaluated at the algebraic number alpha.
int signAtRoot(const RealRoot& alpha, const Poly& A);

}  // namespace distlab
