#include "distlab/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace distlab {

void Poly::trim() {
  while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

const Rational& Poly::leading() const {
  if (isZero()) throw std::logic_error("Poly::leading: zero polynomial");
  return c_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1, Rational(0));
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.isZero() || b.isZero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
  std::vector<Rational> c(p.c_);
  for (Rational& v : c) v *= s;
  return Poly(std::move(c));
}

Poly operator-(const Poly& p) { return Rational(-1) * p; }

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.isZero()) throw std::invalid_argument("Poly::divmod: division by zero polynomial");
  std::vector<Rational> rem(a.c_);
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i].isZero()) continue;
    const Rational f = rem[i] / b.leading();
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.isZero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.isZero()) return a;
  return (Rational(1) / a.leading()) * a;
}

Poly Poly::squarefreePart() const {
  if (isZero() || degree() == 0) return *this;
  const Poly g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  return divmod(*this, g).first;
}

SturmChain::SturmChain(const Poly& squarefree) {
  seq_.push_back(squarefree);
  if (squarefree.degree() >= 1) {
    seq_.push_back(squarefree.derivative());
    while (seq_.back().degree() >= 1) {
      Poly r = Poly::divmod(seq_[seq_.size() - 2], seq_.back()).second;
      if (r.isZero()) break;
      seq_.push_back(-r);
    }
  }
}

namespace {

int countSignFlips(const std::vector<int>& signs) {
  int flips = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++flips;
    prev = s;
  }
  return flips;
}

}  // namespace

int SturmChain::signChangesAt(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const Poly& p : seq_) signs.push_back(p(x).sign());
  return countSignFlips(signs);
}

int SturmChain::signChangesAtNegInf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const Poly& p : seq_) {
    if (p.isZero()) {
      signs.push_back(0);
    } else {
      signs.push_back(p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign());
    }
  }
  return countSignFlips(signs);
}

int SturmChain::signChangesAtPosInf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const Poly& p : seq_) signs.push_back(p.isZero() ? 0 : p.leading().sign());
  return countSignFlips(signs);
}

int SturmChain::countRoots(const Rational& lo, const Rational& hi) const {
  return signChangesAt(lo) - signChangesAt(hi);
}

int SturmChain::countAllRoots() const {
  return signChangesAtNegInf() - signChangesAtPosInf();
}

namespace {

Rational cauchyBound(const Poly& p) {
  Rational m(0);
  const Rational lead = p.leading().abs();
  for (int i = 0; i < p.degree(); ++i) {
    const Rational v = p.coeff(static_cast<std::size_t>(i)).abs() / lead;
    if (v > m) m = v;
  }
  return m + 1;
}

// A split point strictly inside (lo, hi) where p does not vanish. Tries the
// midpoint first, then nearby rationals; p has finitely many roots so this
// terminates.
Rational splitPoint(const Poly& p, const Rational& lo, const Rational& hi) {
  for (long k = 1;; ++k) {
    const Rational t(1, 2 * k);
    const Rational mid = lo + t * (hi - lo);
    if (!p(mid).isZero()) return mid;
  }
}

}  // namespace

std::vector<RealRoot> isolateRealRoots(const Poly& p) {
  if (p.isZero()) throw std::invalid_argument("isolateRealRoots: zero polynomial");
  std::vector<RealRoot> roots;
  const Poly q = p.squarefreePart();
  if (q.degree() < 1) return roots;
  const SturmChain chain(q);
  const Rational bound = cauchyBound(q);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int n = chain.countRoots(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      roots.push_back(RealRoot{q, lo, hi});
      continue;
    }
    const Rational mid = splitPoint(q, lo, hi);
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  return roots;
}

int signAtRoot(const RealRoot& alpha, const Poly& A) {
  if (A.isZero()) return 0;
  if (A.degree() == 0) return A.leading().sign();
  const Poly g = Poly::gcd(alpha.p, A);
  if (g.degree() >= 1 && SturmChain(g).countRoots(alpha.lo, alpha.hi) > 0) {
    // g divides alpha.p, which has a single root in the interval, so the
    // shared root is alpha itself.
    return 0;
  }
  const Poly asf = A.squarefreePart();
  const SturmChain chainA(asf);
  const SturmChain chainP(alpha.p);
  Rational lo = alpha.lo;
  Rational hi = alpha.hi;
  for (;;) {
    // Roots of A in the open interval; alpha itself is not one of them.
    const int openCount = chainA.countRoots(lo, hi) - (A(hi).isZero() ? 1 : 0);
    if (openCount == 0) {
      // A is sign-constant on (lo, hi), which contains alpha.
      const Rational m = splitPoint(asf, lo, hi);
      return A(m).sign();
    }
    const Rational mid = splitPoint(alpha.p, lo, hi);
    if (chainP.countRoots(lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

}  // namespace distlab
