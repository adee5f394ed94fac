#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "distlab/geometry2d.hpp"
#include "distlab/geometry3d.hpp"

namespace distlab {

/// Incidence/tangency graph between two indexed object families.
struct BipartiteGraph {
  std::size_t leftCount = 0;
  std::size_t rightCount = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges;

  void addEdge(std::size_t l, std::size_t r);
  bool hasEdge(std::size_t l, std::size_t r) const { return edges.count({l, r}) > 0; }
  std::size_t edgeCount() const { return edges.size(); }
};

struct KstWitness {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

/// Finds a complete bipartite K_{s,t} subgraph (s left vertices, t right
/// vertices), or certifies absence. Exhaustive over subsets of the cheaper
/// side with common-neighborhood intersection; intended for small s, t.
std::optional<KstWitness> findKst(const BipartiteGraph& g, std::size_t s, std::size_t t);

/// The set of squared-distance keys realized between two families, with the
/// per-source refinement (number of distinct keys seen from each source).
struct DistanceCensus {
  std::set<DistKey> keys;
  std::map<std::size_t, std::size_t> perSourceCounts;

  std::size_t size() const { return keys.size(); }
};

enum class ZeroDistances { Include, Exclude };

DistanceCensus distinctPointLineDistances(std::span<const Point2> points,
                                          std::span<const Line2> lines,
                                          ZeroDistances zeros = ZeroDistances::Include);

std::size_t repeatedPointLineDistances(std::span<const Point2> points,
                                       std::span<const Line2> lines, const Rational& d2);

/// All lines through at least two of the points, canonical and deduplicated.
std::vector<Line2> spannedLines(std::span<const Point2> points);

/// Census between the points and their spanned lines. Throws when the input
/// is entirely collinear (the quantity is undefined there).
DistanceCensus spannedDistanceCensus(std::span<const Point2> points);

std::size_t maxCollinear(std::span<const Point2> points);
std::size_t maxCollinear(std::span<const Point3> points);

std::size_t countIncidences(std::span<const Point2> points, std::span<const Line2> lines);

DistanceCensus distinctPointPlaneDistances(std::span<const Point3> points,
                                           std::span<const Plane3> planes,
                                           ZeroDistances zeros = ZeroDistances::Include);

DistanceCensus distinctPointLine3Distances(std::span<const Point3> points,
                                           std::span<const Line3> lines,
                                           ZeroDistances zeros = ZeroDistances::Include);

}  // namespace distlab
