#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace distlab {

/// Arbitrary-precision rational, the only scalar on exact code paths.
/// Always stored reduced with positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, integer literals are pervasive
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "num/den" or "num" (decimal). Rejects zero denominators and
  /// malformed input; accepts non-reduced fractions and reduces them.
  static Rational fromString(std::string_view s);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool isZero() const { return sign() == 0; }
  bool isNegative() const { return sign() < 0; }
  bool isInteger() const { return q_.get_den() == 1; }

  Rational abs() const;
  Rational squared() const;
  double toDouble() const { return q_.get_d(); }

  /// "num/den", with "/den" omitted when the denominator is 1.
  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  std::size_t hash() const;

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::size_t hashMpz(const mpz_class& z);

inline std::size_t hashCombine(std::size_t seed, std::size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace distlab

template <>
struct std::hash<distlab::Rational> {
  std::size_t operator()(const distlab::Rational& r) const { return r.hash(); }
};
