#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "distlab/scene.hpp"

namespace distlab {

enum class GeneratorKind {
  ParallelMedian,
  CollinearPlusOne,
  ElekesGrid,
  PythagoreanTangency,
  ParallelPlanes3D,
  ParallelLines3D,
  CylinderConfig3D,
  ConeConfig3D,
  HyperboloidConfig3D,
  RandomRational,
};

/// Scene generator request: the construction, its named size parameters and
/// (for RandomRational) a seed. Every generator emits a canonical,
/// deduplicated scene with its designed counts attached as metadata.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::RandomRational;
  std::map<std::string, long> sizeParams;
  std::uint64_t seed = 0;
};

GeneratorKind generatorKindFromName(const std::string& name);
std::string generatorName(GeneratorKind kind);
std::vector<std::string> generatorNames();

Scene generate(const GeneratorSpec& spec);

/// Primitive Pythagorean slopes 3/4, 5/12, 8/15, ... (smaller leg over
/// larger leg, ordered by hypotenuse). Lines with these slopes admit exact
/// rational unit-perpendicular shifts. Throws once the table is exhausted.
std::vector<Rational> pythagoreanSlopes(std::size_t count);

}  // namespace distlab
