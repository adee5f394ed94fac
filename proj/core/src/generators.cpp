#include "distlab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "distlab/randomgen.hpp"
#include "distlab/transform.hpp"

namespace distlab {

namespace {

const std::pair<const char*, GeneratorKind> kGeneratorNames[] = {
    {"parallel-median", GeneratorKind::ParallelMedian},
    {"collinear-plus-one", GeneratorKind::CollinearPlusOne},
    {"elekes-grid", GeneratorKind::ElekesGrid},
    {"pythagorean-tangency", GeneratorKind::PythagoreanTangency},
    {"parallel-planes-3d", GeneratorKind::ParallelPlanes3D},
    {"parallel-lines-3d", GeneratorKind::ParallelLines3D},
    {"cylinder-config-3d", GeneratorKind::CylinderConfig3D},
    {"cone-config-3d", GeneratorKind::ConeConfig3D},
    {"hyperboloid-config-3d", GeneratorKind::HyperboloidConfig3D},
    {"random-rational", GeneratorKind::RandomRational},
};

long param(const GeneratorSpec& spec, const std::string& name) {
  const auto it = spec.sizeParams.find(name);
  if (it == spec.sizeParams.end()) {
    throw std::invalid_argument("generator " + generatorName(spec.kind) +
                                ": missing size parameter '" + name + "'");
  }
  if (it->second <= 0) {
    throw std::invalid_argument("generator " + generatorName(spec.kind) + ": parameter '" + name +
                                "' must be positive");
  }
  return it->second;
}

long paramOr(const GeneratorSpec& spec, const std::string& name, long fallback) {
  const auto it = spec.sizeParams.find(name);
  if (it == spec.sizeParams.end()) return fallback;
  if (it->second < 0) {
    throw std::invalid_argument("generator " + generatorName(spec.kind) + ": parameter '" + name +
                                "' must be nonnegative");
  }
  return it->second;
}

void stampParams(Scene& scene, const GeneratorSpec& spec) {
  scene.metadata["generator"] = generatorName(spec.kind);
  for (const auto& [k, v] : spec.sizeParams) scene.metadata["param_" + k] = std::to_string(v);
}

Scene genParallelMedian(const GeneratorSpec& spec) {
  const long n = param(spec, "n");
  const long m = param(spec, "m");
  Scene scene;
  for (long j = 1; j <= n; ++j) scene.lines2.push_back(Line2::horizontal(Rational(j)));
  const Rational median(n + 1, 2);
  for (long i = 1; i <= m; ++i) scene.points2.push_back({Rational(i), median});
  stampParams(scene, spec);
  scene.metadata["designed_quantity"] = "distinctPL";
  scene.metadata["designed_value"] = std::to_string((n + 1) / 2);
  return scene;
}

Scene genCollinearPlusOne(const GeneratorSpec& spec) {
  const long m = param(spec, "m");
  if (m < 3) throw std::invalid_argument("collinear-plus-one: m must be at least 3");
  Scene scene;
  for (long i = 1; i < m; ++i) scene.points2.push_back({Rational(i), Rational(0)});
  scene.points2.push_back({Rational(0), Rational(1)});
  stampParams(scene, spec);
  scene.metadata["designed_quantity"] = "spannedLines";
  scene.metadata["designed_value"] = std::to_string(m);
  return scene;
}

Scene genElekesGrid(const GeneratorSpec& spec) {
  const long r = param(spec, "r");
  const long s = param(spec, "s");
  const long t = param(spec, "t");
  Scene scene;
  // Lines y = i*x + j meet every grid column x in [1, t] inside the box.
  for (long i = 1; i <= r; ++i) {
    for (long j = 1; j <= s; ++j) scene.lines2.push_back(Line2(Rational(i), Rational(-1), Rational(j)));
  }
  for (long x = 1; x <= t; ++x) {
    for (long y = 1; y <= r * t + s; ++y) scene.points2.push_back({Rational(x), Rational(y)});
  }
  stampParams(scene, spec);
  scene.metadata["designed_quantity"] = "incidences";
  scene.metadata["designed_value"] = std::to_string(r * s * t);
  return scene;
}

struct SlopeTriple {
  long p, q, h;  // slope p/q, p < q, p^2 + q^2 = h^2
};

std::vector<SlopeTriple> slopeTriples(std::size_t count) {
  std::vector<SlopeTriple> triples;
  for (long u = 2; triples.size() < count + 64 && u < 256; ++u) {
    for (long v = 1; v < u; ++v) {
      if ((u - v) % 2 == 0 || std::gcd(u, v) != 1) continue;
      const long a = u * u - v * v, b = 2 * u * v;
      triples.push_back({std::min(a, b), std::max(a, b), u * u + v * v});
    }
  }
  std::sort(triples.begin(), triples.end(), [](const SlopeTriple& x, const SlopeTriple& y) {
    if (x.h != y.h) return x.h < y.h;
    return x.p < y.p;
  });
  if (triples.size() < count) throw std::length_error("pythagoreanSlopes: table exhausted");
  triples.resize(count);
  return triples;
}

// The Elekes-style source grid restricted to Pythagorean slopes, scaled so
// that the unit-shifted lines pick up no stray tangencies: with the scene
// scaled by an odd M > 2*max(h), a grid point is at distance exactly 1 from
// a shifted line iff it lay on the source line.
Scene genPythagoreanTangency(const GeneratorSpec& spec) {
  const long r = param(spec, "r");
  const long s = param(spec, "s");
  const long t = param(spec, "t");
  const auto slopes = slopeTriples(static_cast<std::size_t>(r));

  long qlcm = 1;
  long hmax = 0;
  for (const SlopeTriple& st : slopes) {
    qlcm = std::lcm(qlcm, st.q);
    hmax = std::max(hmax, st.h);
  }
  const long M = 2 * hmax + 1;

  Scene scene;
  // Source grid: x in {Q, 2Q, ..., tQ} so slope*x is integral, y in [1, Qt+s];
  // everything then scaled by M, with unit circles at the scaled points and
  // each line replaced by its unit perpendicular shift.
  for (const SlopeTriple& st : slopes) {
    const Rational slope(st.p, st.q);
    const Rational shift(st.h, st.q);  // sqrt(1 + slope^2), exact
    for (long j = 1; j <= s; ++j) {
      // y = slope*x + M*j - shift  ==  slope*x - y + (M*j - shift) = 0
      scene.lines2.push_back(Line2(slope, Rational(-1), Rational(M * j) - shift));
    }
  }
  for (long k = 1; k <= t; ++k) {
    for (long y = 1; y <= qlcm * t + s; ++y) {
      scene.circles2.push_back(
          Circle2({Rational(M * qlcm * k), Rational(M * y)}, Rational(1)));
    }
  }
  stampParams(scene, spec);
  scene.metadata["designed_quantity"] = "lineCircleTangencies";
  scene.metadata["designed_value"] = std::to_string(r * s * t);
  scene.metadata["source_incidences"] = std::to_string(r * s * t);
  return scene;
}

Scene genParallelPlanes3D(const GeneratorSpec& spec) {
  const long n = param(spec, "n");
  const long m = param(spec, "m");
  Scene scene;
  for (long j = 1; j <= n; ++j) scene.planes3.push_back(Plane3(0, 0, 1, Rational(-j)));
  for (long i = 1; i <= m; ++i) scene.points3.push_back({Rational(i), Rational(0), Rational(1)});
  stampParams(scene, spec);
  scene.metadata["designed_quantity"] = "distinctPP";
  scene.metadata["designed_value"] = std::to_string(n);
  return scene;
}

Scene genParallelLines3D(const GeneratorSpec& spec) {
  const long n = param(spec, "n");
  const long m = param(spec, "m");
  Scene scene;
  for (long j = 1; j <= n; ++j) {
    scene.lines3.push_back(Line3({Rational(j), Rational(0), Rational(0)}, Vec3{0, 0, 1}));
  }
  for (long i = 1; i <= m; ++i) scene.points3.push_back({Rational(1), Rational(0), Rational(i)});
  stampParams(scene, spec);
  scene.metadata["designed_quantity"] = "distinctPL3";
  scene.metadata["designed_value"] = std::to_string(n);
  return scene;
}

// Rational points on the unit circle: the four axis points plus sign/swap
// variants of the Pythagorean angles, enough for t distinct directions.
std::vector<RationalAngle> unitDirections(std::size_t count) {
  std::vector<RationalAngle> dirs = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::size_t base = 0;
  while (dirs.size() < count) {
    const auto angles = pythagoreanAngles(base + 16);
    dirs.resize(4);
    for (const RationalAngle& a : angles) {
      dirs.push_back({a.cos, a.sin});
      dirs.push_back({-a.cos, a.sin});
      dirs.push_back({a.cos, -a.sin});
      dirs.push_back({-a.cos, -a.sin});
      dirs.push_back({a.sin, a.cos});
      dirs.push_back({-a.sin, a.cos});
      dirs.push_back({a.sin, -a.cos});
      dirs.push_back({-a.sin, -a.cos});
    }
    base += 16;
  }
  dirs.resize(count);
  return dirs;
}

Scene genCylinderConfig3D(const GeneratorSpec& spec) {
  const long s = param(spec, "s");
  const long t = param(spec, "t");
  Scene scene;
  for (long i = 1; i <= s; ++i) scene.points3.push_back({Rational(0), Rational(0), Rational(i)});
  // Tangent planes and rulings of the unit cylinder about the z-axis.
  for (const RationalAngle& d : unitDirections(static_cast<std::size_t>(t))) {
    scene.planes3.push_back(Plane3(d.cos, d.sin, 0, Rational(-1)));
    scene.lines3.push_back(Line3({d.cos, d.sin, Rational(0)}, Vec3{0, 0, 1}));
  }
  stampParams(scene, spec);
  scene.metadata["designed_quantity"] = "distinctPPpositive";
  scene.metadata["designed_value"] = "1";
  return scene;
}

Scene genConeConfig3D(const GeneratorSpec& spec) {
  const long s = param(spec, "s");
  const long t = param(spec, "t");
  Scene scene;
  for (long i = 1; i <= s; ++i) scene.points3.push_back({Rational(0), Rational(0), Rational(i)});
  // Tangent planes and rulings of the cone x^2 + y^2 = z^2 (apex at origin).
  for (const RationalAngle& d : unitDirections(static_cast<std::size_t>(t))) {
    scene.planes3.push_back(Plane3(d.cos, d.sin, Rational(-1), Rational(0)));
    scene.lines3.push_back(Line3({Rational(0), Rational(0), Rational(0)}, Vec3{d.cos, d.sin, 1}));
  }
  stampParams(scene, spec);
  return scene;
}

Scene genHyperboloidConfig3D(const GeneratorSpec& spec) {
  const long s = param(spec, "s");
  const long t = param(spec, "t");
  Scene scene;
  for (long i = 1; i <= s; ++i) scene.points3.push_back({Rational(0), Rational(0), Rational(i)});
  // One ruling family of x^2 + y^2 - z^2 = 1: through (c, s, 0) with
  // direction (-s, c, 1).
  for (const RationalAngle& d : unitDirections(static_cast<std::size_t>(t))) {
    scene.lines3.push_back(Line3({d.cos, d.sin, Rational(0)}, Vec3{-d.sin, d.cos, 1}));
  }
  stampParams(scene, spec);
  return scene;
}

Scene genRandomRational(const GeneratorSpec& spec) {
  const long height = paramOr(spec, "height", 1000);
  if (height < 1) throw std::invalid_argument("random-rational: height must be positive");
  Rng rng(spec.seed);
  Scene scene;

  auto fill = [&](auto& family, long want, auto make) {
    std::unordered_set<typename std::decay_t<decltype(family)>::value_type> seen;
    while (static_cast<long>(family.size()) < want) {
      auto obj = make();
      if (seen.insert(obj).second) family.push_back(std::move(obj));
    }
  };
  fill(scene.points2, paramOr(spec, "points2", 0), [&] { return randomPoint2(rng, height); });
  fill(scene.lines2, paramOr(spec, "lines2", 0), [&] { return randomLine2(rng, height); });
  fill(scene.circles2, paramOr(spec, "circles2", 0), [&] { return randomCircle2(rng, height); });
  fill(scene.points3, paramOr(spec, "points3", 0), [&] { return randomPoint3(rng, height); });
  fill(scene.planes3, paramOr(spec, "planes3", 0), [&] { return randomPlane3(rng, height); });
  fill(scene.lines3, paramOr(spec, "lines3", 0), [&] { return randomLine3(rng, height); });
  fill(scene.spheres3, paramOr(spec, "spheres3", 0), [&] { return randomSphere3(rng, height); });
  stampParams(scene, spec);
  scene.metadata["seed"] = std::to_string(spec.seed);
  return scene;
}

}  // namespace

GeneratorKind generatorKindFromName(const std::string& name) {
  for (const auto& [n, kind] : kGeneratorNames) {
    if (name == n) return kind;
  }
  throw std::invalid_argument("unknown generator '" + name + "'");
}

std::string generatorName(GeneratorKind kind) {
  for (const auto& [n, k] : kGeneratorNames) {
    if (k == kind) return n;
  }
  return "?";
}

std::vector<std::string> generatorNames() {
  std::vector<std::string> names;
  for (const auto& [n, k] : kGeneratorNames) names.emplace_back(n);
  return names;
}

std::vector<Rational> pythagoreanSlopes(std::size_t count) {
  std::vector<Rational> out;
  for (const SlopeTriple& st : slopeTriples(count)) out.push_back(Rational(st.p, st.q));
  return out;
}

Scene generate(const GeneratorSpec& spec) {
  Scene scene;
  switch (spec.kind) {
    case GeneratorKind::ParallelMedian: scene = genParallelMedian(spec); break;
    case GeneratorKind::CollinearPlusOne: scene = genCollinearPlusOne(spec); break;
    case GeneratorKind::ElekesGrid: scene = genElekesGrid(spec); break;
    case GeneratorKind::PythagoreanTangency: scene = genPythagoreanTangency(spec); break;
    case GeneratorKind::ParallelPlanes3D: scene = genParallelPlanes3D(spec); break;
    case GeneratorKind::ParallelLines3D: scene = genParallelLines3D(spec); break;
    case GeneratorKind::CylinderConfig3D: scene = genCylinderConfig3D(spec); break;
    case GeneratorKind::ConeConfig3D: scene = genConeConfig3D(spec); break;
    case GeneratorKind::HyperboloidConfig3D: scene = genHyperboloidConfig3D(spec); break;
    case GeneratorKind::RandomRational: scene = genRandomRational(spec); break;
  }
  scene.dedupe();  // generators are designed duplicate-free; this enforces it
  return scene;
}

}  // namespace distlab
