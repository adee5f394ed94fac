#include "distlab/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace distlab {

void BipartiteGraph::addEdge(std::size_t l, std::size_t r) {
  if (l >= leftCount || r >= rightCount) throw std::out_of_range("BipartiteGraph::addEdge");
  edges.insert({l, r});
}

namespace {

// Enumerates size-k index subsets of [0, n) in lexicographic order.
template <class F>
void forEachSubset(std::size_t n, std::size_t k, F&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!visit(idx)) return;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return;
    }
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double subsetCount(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

}  // namespace

std::optional<KstWitness> findKst(const BipartiteGraph& g, std::size_t s, std::size_t t) {
  if (s == 0 || t == 0) throw std::invalid_argument("findKst: s and t must be positive");
  if (s > g.leftCount || t > g.rightCount) return std::nullopt;

  std::vector<std::vector<std::size_t>> leftAdj(g.leftCount), rightAdj(g.rightCount);
  for (const auto& [l, r] : g.edges) {
    leftAdj[l].push_back(r);
    rightAdj[r].push_back(l);
  }

  // Work from whichever side has fewer subsets to try.
  const bool fromLeft = subsetCount(g.leftCount, s) <= subsetCount(g.rightCount, t);
  const auto& adj = fromLeft ? leftAdj : rightAdj;
  const std::size_t pick = fromLeft ? s : t;
  const std::size_t need = fromLeft ? t : s;
  const std::size_t universe = fromLeft ? g.leftCount : g.rightCount;

  std::optional<KstWitness> found;
  forEachSubset(universe, pick, [&](const std::vector<std::size_t>& subset) {
    std::vector<std::size_t> common = adj[subset[0]];
    std::sort(common.begin(), common.end());
    for (std::size_t i = 1; i < subset.size() && !common.empty(); ++i) {
      std::vector<std::size_t> nbr = adj[subset[i]];
      std::sort(nbr.begin(), nbr.end());
      std::vector<std::size_t> next;
      std::set_intersection(common.begin(), common.end(), nbr.begin(), nbr.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    if (common.size() >= need) {
      common.resize(need);
      if (fromLeft) {
        found = KstWitness{subset, common};
      } else {
        found = KstWitness{common, subset};
      }
      return false;
    }
    return true;
  });
  return found;
}

namespace {

template <class PointT, class ObjT>
DistanceCensus distinctDistances(std::span<const PointT> points, std::span<const ObjT> objects,
                                 ZeroDistances zeros) {
  if (points.empty() || objects.empty()) {
    throw std::invalid_argument("distinct distances: both families must be nonempty");
  }
  DistanceCensus census;
  std::unordered_set<DistKey> keys;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::unordered_set<DistKey> mine;
    for (const ObjT& obj : objects) {
      DistKey k = distSq(points[i], obj);
      if (zeros == ZeroDistances::Exclude && k.d2.isZero()) continue;
      keys.insert(k);
      mine.insert(std::move(k));
    }
    census.perSourceCounts[i] = mine.size();
  }
  for (const DistKey& k : keys) census.keys.insert(k);
  return census;
}

}  // namespace

DistanceCensus distinctPointLineDistances(std::span<const Point2> points,
                                          std::span<const Line2> lines, ZeroDistances zeros) {
  return distinctDistances(points, lines, zeros);
}

std::size_t repeatedPointLineDistances(std::span<const Point2> points,
                                       std::span<const Line2> lines, const Rational& d2) {
  if (d2.isNegative()) throw std::invalid_argument("repeatedPointLineDistances: negative d2");
  std::size_t count = 0;
  for (const Point2& p : points) {
    for (const Line2& l : lines) {
      if (distSq(p, l).d2 == d2) ++count;
    }
  }
  return count;
}

std::vector<Line2> spannedLines(std::span<const Point2> points) {
  if (points.size() < 2) throw std::invalid_argument("spannedLines: need at least two points");
  std::unordered_set<Line2> seen;
  std::vector<Line2> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) continue;
      Line2 l = Line2::through(points[i], points[j]);
      if (seen.insert(l).second) out.push_back(std::move(l));
    }
  }
  if (out.empty()) throw std::invalid_argument("spannedLines: need at least two distinct points");
  return out;
}

DistanceCensus spannedDistanceCensus(std::span<const Point2> points) {
  const std::vector<Line2> lines = spannedLines(points);
  if (lines.size() == 1) {
    throw std::invalid_argument("spannedDistanceCensus: points are collinear");
  }
  return distinctPointLineDistances(points, lines);
}

namespace {

// Canonical primitive direction of q - p, sign-normalized; hashing these per
// source point finds the richest line through it in O(m) space.
template <class PointT, class DirT>
struct DirectionHash;

struct Dir2 {
  Rational x, y;
  bool operator==(const Dir2& o) const { return x == o.x && y == o.y; }
};
struct Dir3 {
  Rational x, y, z;
  bool operator==(const Dir3& o) const { return x == o.x && y == o.y && z == o.z; }
};

struct Dir2Hasher {
  std::size_t operator()(const Dir2& d) const { return hashCombine(d.x.hash(), d.y.hash()); }
};
struct Dir3Hasher {
  std::size_t operator()(const Dir3& d) const {
    return hashCombine(hashCombine(d.x.hash(), d.y.hash()), d.z.hash());
  }
};

Dir2 canonicalDir(const Point2& p, const Point2& q) {
  Rational dx = q.x - p.x;
  Rational dy = q.y - p.y;
  // Reduce to a primitive integer vector with first nonzero positive.
  mpz_class l(1);
  mpz_lcm(l.get_mpz_t(), dx.den().get_mpz_t(), dy.den().get_mpz_t());
  mpz_class nx(dx.num() * (l / dx.den()));
  mpz_class ny(dy.num() * (l / dy.den()));
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
  const int flip = mpz_sgn(nx.get_mpz_t()) != 0 ? mpz_sgn(nx.get_mpz_t()) : mpz_sgn(ny.get_mpz_t());
  return {Rational(mpz_class(nx * flip), g), Rational(mpz_class(ny * flip), g)};
}

Dir3 canonicalDir(const Point3& p, const Point3& q) {
  const Vec3 d = q - p;
  mpz_class l(1);
  mpz_lcm(l.get_mpz_t(), d.x.den().get_mpz_t(), d.y.den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.z.den().get_mpz_t());
  mpz_class nx(d.x.num() * (l / d.x.den()));
  mpz_class ny(d.y.num() * (l / d.y.den()));
  mpz_class nz(d.z.num() * (l / d.z.den()));
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nz.get_mpz_t());
  int flip = mpz_sgn(nx.get_mpz_t());
  if (flip == 0) flip = mpz_sgn(ny.get_mpz_t());
  if (flip == 0) flip = mpz_sgn(nz.get_mpz_t());
  return {Rational(mpz_class(nx * flip), g), Rational(mpz_class(ny * flip), g),
          Rational(mpz_class(nz * flip), g)};
}

template <class PointT, class DirT, class Hasher>
std::size_t maxCollinearImpl(std::span<const PointT> points) {
  if (points.size() <= 2) return points.size();
  std::size_t best = 2;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::unordered_map<DirT, std::size_t, Hasher> dirs;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) continue;
      best = std::max(best, ++dirs[canonicalDir(points[i], points[j])] + 1);
    }
  }
  return best;
}

}  // namespace

std::size_t maxCollinear(std::span<const Point2> points) {
  return maxCollinearImpl<Point2, Dir2, Dir2Hasher>(points);
}

std::size_t maxCollinear(std::span<const Point3> points) {
  return maxCollinearImpl<Point3, Dir3, Dir3Hasher>(points);
}

std::size_t countIncidences(std::span<const Point2> points, std::span<const Line2> lines) {
  std::size_t count = 0;
  for (const Point2& p : points) {
    for (const Line2& l : lines) {
      if (incident(p, l)) ++count;
    }
  }
  return count;
}

DistanceCensus distinctPointPlaneDistances(std::span<const Point3> points,
                                           std::span<const Plane3> planes, ZeroDistances zeros) {
  return distinctDistances(points, planes, zeros);
}

DistanceCensus distinctPointLine3Distances(std::span<const Point3> points,
                                           std::span<const Line3> lines, ZeroDistances zeros) {
  return distinctDistances(points, lines, zeros);
}

}  // namespace distlab
