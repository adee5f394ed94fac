#include "distlab/scene_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace distlab {

namespace {

using nlohmann::json;

std::pair<int, int> lineColumnOf(const std::string& text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Rational rat(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw std::invalid_argument("rational values must be strings like \"3/4\"");
  return Rational::fromString(v.get<std::string>());
}

json ratJson(const Rational& r) { return r.str(); }

json tupleJson(std::initializer_list<Rational> vs) {
  json arr = json::array();
  for (const Rational& v : vs) arr.push_back(ratJson(v));
  return arr;
}

const json& expectArray(const json& v, std::size_t n, const char* what) {
  if (!v.is_array() || v.size() != n) {
    throw std::invalid_argument(std::string(what) + ": expected array of " + std::to_string(n));
  }
  return v;
}

Scene sceneFromJson(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("scene document must be a JSON object");
  Scene scene;
  if (doc.contains("points2")) {
    for (const json& p : doc["points2"]) {
      expectArray(p, 2, "points2 entry");
      scene.points2.push_back({rat(p[0]), rat(p[1])});
    }
  }
  if (doc.contains("lines2")) {
    for (const json& l : doc["lines2"]) {
      scene.lines2.push_back(Line2(rat(l.at("a")), rat(l.at("b")), rat(l.at("c"))));
    }
  }
  if (doc.contains("circles2")) {
    for (const json& c : doc["circles2"]) {
      const json& ctr = expectArray(c.at("center"), 2, "circle center");
      scene.circles2.push_back(Circle2({rat(ctr[0]), rat(ctr[1])}, rat(c.at("r2"))));
    }
  }
  if (doc.contains("points3")) {
    for (const json& p : doc["points3"]) {
      expectArray(p, 3, "points3 entry");
      scene.points3.push_back({rat(p[0]), rat(p[1]), rat(p[2])});
    }
  }
  if (doc.contains("planes3")) {
    for (const json& pl : doc["planes3"]) {
      scene.planes3.push_back(
          Plane3(rat(pl.at("a")), rat(pl.at("b")), rat(pl.at("c")), rat(pl.at("d"))));
    }
  }
  if (doc.contains("lines3")) {
    for (const json& l : doc["lines3"]) {
      const json& u = expectArray(l.at("u"), 3, "line anchor");
      const json& v = expectArray(l.at("v"), 3, "line direction");
      scene.lines3.push_back(
          Line3({rat(u[0]), rat(u[1]), rat(u[2])}, Vec3{rat(v[0]), rat(v[1]), rat(v[2])}));
    }
  }
  if (doc.contains("spheres3")) {
    for (const json& s : doc["spheres3"]) {
      const json& ctr = expectArray(s.at("center"), 3, "sphere center");
      scene.spheres3.push_back(
          Sphere3({rat(ctr[0]), rat(ctr[1]), rat(ctr[2])}, rat(s.at("r2"))));
    }
  }
  if (doc.contains("metadata")) {
    for (const auto& [key, value] : doc["metadata"].items()) {
      scene.metadata[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  return scene;
}

}  // namespace

LoadReport parseScene(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = lineColumnOf(text, e.byte > 0 ? e.byte - 1 : 0);
    throw SceneParseError("scene parse error at line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + e.what(),
                          line, column);
  }
  LoadReport report;
  try {
    report.scene = sceneFromJson(doc);
  } catch (const std::invalid_argument& e) {
    throw SceneParseError(std::string("scene schema error: ") + e.what(), 0, 0);
  }
  report.mergedDuplicates = report.scene.dedupe();
  return report;
}

LoadReport loadScene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scene file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseScene(buffer.str());
}

std::string sceneToJson(const Scene& scene) {
  json doc = json::object();
  if (!scene.points2.empty()) {
    json arr = json::array();
    for (const Point2& p : scene.points2) arr.push_back(tupleJson({p.x, p.y}));
    doc["points2"] = std::move(arr);
  }
  if (!scene.lines2.empty()) {
    json arr = json::array();
    for (const Line2& l : scene.lines2) {
      arr.push_back({{"a", ratJson(l.a())}, {"b", ratJson(l.b())}, {"c", ratJson(l.c())}});
    }
    doc["lines2"] = std::move(arr);
  }
  if (!scene.circles2.empty()) {
    json arr = json::array();
    for (const Circle2& c : scene.circles2) {
      arr.push_back({{"center", tupleJson({c.center().x, c.center().y})}, {"r2", ratJson(c.r2())}});
    }
    doc["circles2"] = std::move(arr);
  }
  if (!scene.points3.empty()) {
    json arr = json::array();
    for (const Point3& p : scene.points3) arr.push_back(tupleJson({p.x, p.y, p.z}));
    doc["points3"] = std::move(arr);
  }
  if (!scene.planes3.empty()) {
    json arr = json::array();
    for (const Plane3& pl : scene.planes3) {
      arr.push_back({{"a", ratJson(pl.a())},
                     {"b", ratJson(pl.b())},
                     {"c", ratJson(pl.c())},
                     {"d", ratJson(pl.d())}});
    }
    doc["planes3"] = std::move(arr);
  }
  if (!scene.lines3.empty()) {
    json arr = json::array();
    for (const Line3& l : scene.lines3) {
      arr.push_back({{"u", tupleJson({l.anchor().x, l.anchor().y, l.anchor().z})},
                     {"v", tupleJson({l.direction().x, l.direction().y, l.direction().z})}});
    }
    doc["lines3"] = std::move(arr);
  }
  if (!scene.spheres3.empty()) {
    json arr = json::array();
    for (const Sphere3& s : scene.spheres3) {
      arr.push_back({{"center", tupleJson({s.center().x, s.center().y, s.center().z})},
                     {"r2", ratJson(s.r2())}});
    }
    doc["spheres3"] = std::move(arr);
  }
  if (!scene.metadata.empty()) {
    json meta = json::object();
    for (const auto& [k, v] : scene.metadata) meta[k] = v;
    doc["metadata"] = std::move(meta);
  }
  return doc.dump(2) + "\n";
}

void saveScene(const Scene& scene, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scene file: " + path.string());
  out << sceneToJson(scene);
}

}  // namespace distlab
