#include "distlab/scene.hpp"

#include <unordered_set>

namespace distlab {

namespace {

template <class T>
std::size_t dedupeFamily(std::vector<T>& v) {
  std::unordered_set<T> seen;
  seen.reserve(v.size());
  std::vector<T> out;
  out.reserve(v.size());
  for (T& obj : v) {
    if (seen.insert(obj).second) out.push_back(std::move(obj));
  }
  const std::size_t merged = v.size() - out.size();
  v = std::move(out);
  return merged;
}

}  // namespace

std::size_t Scene::dedupe() {
  std::size_t merged = 0;
  merged += dedupeFamily(points2);
  merged += dedupeFamily(lines2);
  merged += dedupeFamily(circles2);
  merged += dedupeFamily(points3);
  merged += dedupeFamily(planes3);
  merged += dedupeFamily(lines3);
  merged += dedupeFamily(spheres3);
  return merged;
}

}  // namespace distlab
