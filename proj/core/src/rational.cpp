#include "distlab/rational.hpp"

#include <ostream>

namespace distlab {

namespace {

mpq_class makeCanonical(mpq_class q) {
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long num, long den) : q_(makeCanonical(mpq_class(num, den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(0) {
  mpq_class q;
  mpz_set(mpq_numref(q.get_mpq_t()), num.get_mpz_t());
  mpz_set(mpq_denref(q.get_mpq_t()), den.get_mpz_t());
  q_ = makeCanonical(std::move(q));
}

Rational Rational::fromString(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      mpz_class n(std::string(s), 10);
      return Rational(n, mpz_class(1));
    }
    mpz_class n(std::string(trim(s.substr(0, slash))), 10);
    mpz_class d(std::string(trim(s.substr(slash + 1))), 10);
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: malformed value '" + std::string(s) + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw std::invalid_argument("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  Rational r = a;
  r /= b;
  return r;
}

Rational Rational::abs() const {
  return isNegative() ? -*this : *this;
}

Rational Rational::squared() const {
  return *this * *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.q_;
}

std::size_t hashMpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = 0xcbf29ce484222325ULL ^ static_cast<std::size_t>(mpz_sgn(p) + 2);
  const std::size_t n = mpz_size(p);
  for (std::size_t i = 0; i < n; ++i) {
    h = (h ^ static_cast<std::size_t>(mpz_getlimbn(p, i))) * 0x100000001b3ULL;
  }
  return h;
}

std::size_t Rational::hash() const {
  return hashCombine(hashMpz(num()), hashMpz(den()));
}

}  // namespace distlab
