#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "distlab/scene.hpp"

namespace distlab {

/// JSON parse or schema failure, with 1-based line/column of the offending
/// byte when available.
struct SceneParseError : std::runtime_error {
  SceneParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg), line(line_), column(column_) {}
  int line = 0;
  int column = 0;
};

struct LoadReport {
  Scene scene;
  std::size_t mergedDuplicates = 0;
};

/// Parses the scene JSON document. Rationals are strings "num/den" (or
/// "num"); non-reduced inputs are reduced, zero denominators rejected.
/// Objects are canonicalized and deduplicated, with the merge count
/// reported.
LoadReport parseScene(const std::string& text);
LoadReport loadScene(const std::filesystem::path& path);

std::string sceneToJson(const Scene& scene);
void saveScene(const Scene& scene, const std::filesystem::path& path);

}  // namespace distlab
