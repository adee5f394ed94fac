#pragma once

#include <span>
#include <vector>

#include "distlab/rational.hpp"

namespace distlab::detail {

// Scales a rational coefficient vector to coprime integers with the first
// nonzero entry positive. Shared by Line2 / Plane3 canonicalization and by
// primitive direction vectors. At least one entry must be nonzero.
inline void canonicalizeCoeffs(std::span<Rational> v) {
  mpz_class l(1);
  for (const Rational& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.den().get_mpz_t());
  mpz_class g(0);
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  for (const Rational& r : v) {
    mpz_class n(r.num() * (l / r.den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  int flip = 1;
  for (const mpz_class& n : ints) {
    const int s = mpz_sgn(n.get_mpz_t());
    if (s != 0) {
      flip = s;
      break;
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = Rational(mpz_class(ints[i] * flip), g);
  }
}

}  // namespace distlab::detail
