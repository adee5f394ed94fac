#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "distlab/census.hpp"
#include "distlab/detectors.hpp"
#include "distlab/duality.hpp"
#include "distlab/experiment.hpp"
#include "distlab/generators.hpp"
#include "distlab/scene_io.hpp"
#include "distlab/solvers.hpp"
#include "distlab/tangency.hpp"

namespace {

using namespace distlab;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::map<std::string, long> parseParams(const std::vector<std::string>& kvs) {
  std::map<std::string, long> params;
  for (const std::string& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--param", "expected key=value, got '" + kv + "'");
    }
    params[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
  }
  return params;
}

Scene loadOrDie(const std::string& path, bool announceMerges) {
  LoadReport report = loadScene(path);
  if (announceMerges && report.mergedDuplicates > 0) {
    std::cerr << "note: merged " << report.mergedDuplicates << " duplicate object(s) on load\n";
  }
  return std::move(report.scene);
}

int runGen(const std::string& name, const std::vector<std::string>& params, std::uint64_t seed,
           const std::string& outPath) {
  GeneratorSpec spec;
  spec.kind = generatorKindFromName(name);
  spec.sizeParams = parseParams(params);
  spec.seed = seed;
  const Scene scene = generate(spec);
  if (outPath.empty() || outPath == "-") {
    std::cout << sceneToJson(scene);
  } else {
    saveScene(scene, outPath);
    std::cerr << "wrote " << scene.totalObjects() << " objects to " << outPath << "\n";
  }
  return kExitOk;
}

int runCountCmd(const std::string& quantity, const std::string& inPath, bool excludeZero,
                const std::string& d2) {
  QuantityRequest request = quantityFromName(quantity);
  if (excludeZero) request.options.excludeZero = true;
  if (!d2.empty()) request.options.d2 = Rational::fromString(d2);
  const Scene scene = loadOrDie(inPath, true);
  const CountResult result = runCount(scene, request);
  std::cout << result.value << "\n";
  std::cerr << "wall time: " << result.wallMs << " ms\n";
  return kExitOk;
}

// Every applicable primal-dual correspondence, reported pair by pair.
int runDualCheck(const std::string& inPath) {
  Scene scene = loadOrDie(inPath, true);
  scene = rotateToGeneric(scene);
  std::size_t checked = 0;
  std::size_t violations = 0;

  for (const Line2& l : scene.lines2) {
    const DualPoint2 dual = dualize(l);
    for (const Circle2& c : scene.circles2) {
      ++checked;
      const auto [upper, lower] = dualize(c);
      const bool primal = tangent(l, c);
      const bool up = onDualHyperbola(dual, upper);
      const bool down = onDualHyperbola(dual, lower);
      if (primal != (up || down) || (up && down)) ++violations;
    }
  }
  for (std::size_t i = 0; i < scene.circles2.size(); ++i) {
    for (std::size_t j = i + 1; j < scene.circles2.size(); ++j) {
      ++checked;
      const Circle2& a = scene.circles2[i];
      const Circle2& b = scene.circles2[j];
      const bool primal = tangency(a, b) != CircleTangency::None;
      const auto [bPlus, bMinus] = liftToCones(b);
      const auto [aPlus, aMinus] = liftToCones(a);
      const bool dual = (liftOnCone(a, bPlus) || liftOnCone(a, bMinus)) &&
                        (liftOnCone(b, aPlus) || liftOnCone(b, aMinus));
      if (primal != dual) ++violations;
    }
  }
  for (const Plane3& pl : scene.planes3) {
    const Point3 dual = dualize(pl);
    for (const Sphere3& s : scene.spheres3) {
      ++checked;
      if (tangent(pl, s) != onDualQuadric(dual, dualize(s))) ++violations;
    }
  }
  for (const Line3& l : scene.lines3) {
    const LineParaboloid4 v = toParaboloid(l);
    for (const Sphere3& s : scene.spheres3) {
      ++checked;
      if (tangent(l, s) != onParaboloid(lift4(s), v)) ++violations;
    }
  }

  std::cout << violations << " violations (" << checked << " pairs checked)\n";
  return violations == 0 ? kExitOk : kExitFailure;
}

void printReport(const ConfigReport& report) {
  std::cout << "found " << configKindName(report.kind) << " configuration (s=" << report.s
            << ", t=" << report.t << ")\n";
  if (report.axis3) {
    const Line3& axis = *report.axis3;
    std::cout << "  axis: anchor (" << axis.anchor().x << ", " << axis.anchor().y << ", "
              << axis.anchor().z << "), direction (" << axis.direction().x << ", "
              << axis.direction().y << ", " << axis.direction().z << ")\n";
  } else if (report.axis2) {
    std::cout << "  axis: " << report.axis2->a() << "x + " << report.axis2->b() << "y + "
              << report.axis2->c() << " = 0\n";
  }
  std::cout << "  points:";
  for (std::size_t i : report.pointMembers) std::cout << " " << i;
  std::cout << "\n";
  if (!report.objectMembers.empty()) {
    std::cout << "  objects:";
    for (std::size_t i : report.objectMembers) std::cout << " " << i;
    std::cout << "\n";
  }
}

int runDetect(const std::string& kind, const std::string& inPath, std::size_t s, std::size_t t) {
  const Scene scene = loadOrDie(inPath, true);
  std::vector<ConfigReport> reports;
  if (kind == "collinear") {
    std::optional<ConfigReport> r;
    if (!scene.points2.empty()) {
      r = detectCollinear(std::span<const Point2>(scene.points2), s);
    } else {
      r = detectCollinear(std::span<const Point3>(scene.points3), s);
    }
    if (r) reports.push_back(std::move(*r));
  } else if (kind == "collinear-sphere-centers") {
    auto r = detectCollinearSphereCenters(scene.spheres3, s);
    if (r) reports.push_back(std::move(*r));
  } else if (kind == "cone-planes" || kind == "cylinder-planes") {
    const ConfigKind want =
        kind == "cone-planes" ? ConfigKind::ConePlanes : ConfigKind::CylinderPlanes;
    for (auto& r : detectPlaneConeCylinderAll(scene.points3, scene.planes3, s, t)) {
      if (r.kind == want) {
        reports.push_back(std::move(r));
        break;
      }
    }
  } else if (kind == "cone-lines" || kind == "cylinder-lines" || kind == "hyperboloid-lines") {
    const ConfigKind want = kind == "cone-lines"
                                ? ConfigKind::ConeLines
                                : (kind == "cylinder-lines" ? ConfigKind::CylinderLines
                                                            : ConfigKind::HyperboloidLines);
    for (auto& r : detectLineConeCylinderHyperboloidAll(scene.points3, scene.lines3, s, t)) {
      if (r.kind == want) {
        reports.push_back(std::move(r));
        break;
      }
    }
  } else {
    throw CLI::ValidationError("detect", "unknown configuration kind '" + kind + "'");
  }

  if (reports.empty()) {
    std::cout << "no " << kind << " configuration found\n";
    return kExitOk;
  }
  for (const ConfigReport& r : reports) {
    if (!verifyReport(r, scene)) {
      std::cerr << "internal error: detector report failed re-verification\n";
      return kExitFailure;
    }
    printReport(r);
  }
  return kExitOk;
}

int runSolve(const std::string& what, const std::string& inPath) {
  const Scene scene = loadOrDie(inPath, true);
  if (what == "apollonius") {
    if (scene.circles2.size() < 3) {
      throw CLI::ValidationError("solve", "apollonius needs at least 3 circles in the scene");
    }
    const auto circles = apollonius(scene.circles2[0], scene.circles2[1], scene.circles2[2]);
    std::cout << circles.size() << " tangent circles\n";
    for (const NumericCircle& c : circles) {
      std::cout << "  center (" << c.cx << ", " << c.cy << ") r=" << c.r
                << " residual=" << c.residual << "\n";
    }
  } else if (what == "tangent-lines") {
    if (scene.circles2.size() < 2) {
      throw CLI::ValidationError("solve", "tangent-lines needs at least 2 circles in the scene");
    }
    const auto result = commonTangentLines(scene.circles2[0], scene.circles2[1]);
    std::cout << result.exactCount << " common tangent lines\n";
    for (const NumericLine& l : result.lines) {
      std::cout << "  " << l.a << "x + " << l.b << "y + " << l.c << " = 0 residual=" << l.residual
                << "\n";
    }
  } else if (what == "tri-lines") {
    if (scene.lines2.size() < 3) {
      throw CLI::ValidationError("solve", "tri-lines needs at least 3 lines in the scene");
    }
    const auto result = tangentCirclesToThreeLines(scene.lines2[0], scene.lines2[1], scene.lines2[2]);
    std::cout << result.exactCount << " tangent circles\n";
    for (const NumericCircle& c : result.circles) {
      std::cout << "  center (" << c.cx << ", " << c.cy << ") r=" << c.r
                << " residual=" << c.residual << "\n";
    }
  } else {
    throw CLI::ValidationError("solve", "unknown solver '" + what + "'");
  }
  return kExitOk;
}

int runExperimentCmd(const std::string& generator, const std::vector<std::string>& sweeps,
                     const std::string& formula, const std::string& quantity,
                     const std::vector<std::string>& params, std::uint64_t seed,
                     const std::string& csvPath, const std::string& jsonPath) {
  SweepSpec sweep;
  sweep.base.kind = generatorKindFromName(generator);
  sweep.base.sizeParams = parseParams(params);
  sweep.base.seed = seed;
  for (const std::string& sv : sweeps) {
    const auto eq = sv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--sweep", "expected axis=v1,v2,..., got '" + sv + "'");
    }
    std::vector<long> values;
    std::string rest = sv.substr(eq + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string tok = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (!tok.empty()) values.push_back(std::stol(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (values.empty()) throw CLI::ValidationError("--sweep", "no values in '" + sv + "'");
    sweep.axes.emplace_back(sv.substr(0, eq), std::move(values));
  }

  QuantityRequest request;
  if (!quantity.empty()) {
    request = quantityFromName(quantity);
  } else {
    // Probe the first sweep point for the generator's designed quantity.
    GeneratorSpec probe = sweep.base;
    for (const auto& [axis, values] : sweep.axes) probe.sizeParams[axis] = values.front();
    const Scene probeScene = generate(probe);
    const auto it = probeScene.metadata.find("designed_quantity");
    if (it == probeScene.metadata.end()) {
      throw CLI::ValidationError("--quantity",
                                 "generator has no designed quantity; pass --quantity");
    }
    request = quantityFromName(it->second);
  }

  const ExperimentReport report = runExperiment(sweep, request, formulaFromName(formula));
  const std::string csv = reportCsv(report);
  if (csvPath.empty() || csvPath == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(csvPath);
    if (!out) throw std::runtime_error("cannot write " + csvPath);
    out << csv;
  }
  if (!jsonPath.empty()) {
    std::ofstream out(jsonPath);
    if (!out) throw std::runtime_error("cannot write " + jsonPath);
    out << reportJson(report);
  }
  for (const auto& [axis, fit] : report.fittedExponents) {
    std::cerr << "fitted exponent in " << axis << ": " << fit.exponent << " (stderr "
              << fit.stderr_ << ", " << fit.points << " points)\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic lab for point-line distance and tangency censuses"};
  app.require_subcommand(1);

  std::string genName, genOut;
  std::vector<std::string> genParams;
  std::uint64_t genSeed = 0;
  auto* gen = app.add_subcommand("gen", "generate a construction scene");
  gen->add_option("name", genName, "generator name")->required();
  gen->add_option("--param", genParams, "size parameter key=value (repeatable)");
  gen->add_option("--seed", genSeed, "random seed (random-rational)");
  gen->add_option("-o,--output", genOut, "output scene path (default stdout)");

  std::string countQuantity, countIn, countD2;
  bool countExcludeZero = false;
  auto* count = app.add_subcommand("count", "run one exact counting quantity");
  count->add_option("quantity", countQuantity, "quantity name")->required();
  count->add_option("-i,--input", countIn, "scene path")->required();
  count->add_flag("--exclude-zero", countExcludeZero, "exclude zero distances");
  count->add_option("--d2", countD2, "target squared distance (repeatedPL)");

  std::string dualIn;
  bool dualCheck = false;
  auto* dual = app.add_subcommand("dual", "primal-dual correspondence checks");
  dual->add_flag("--check", dualCheck, "verify every applicable correspondence");
  dual->add_option("-i,--input", dualIn, "scene path")->required();

  std::string detectKind, detectIn;
  std::size_t detectS = 3, detectT = 3;
  auto* detect = app.add_subcommand("detect", "detect degenerate configurations");
  detect->add_option("kind", detectKind, "configuration kind")->required();
  detect->add_option("-i,--input", detectIn, "scene path")->required();
  detect->add_option("--s", detectS, "minimum collinear points (default 3)");
  detect->add_option("--t", detectT, "minimum group size (default 3)");

  std::string solveWhat, solveIn;
  auto* solve = app.add_subcommand("solve", "numeric tangent-object solvers");
  solve->add_option("what", solveWhat, "apollonius | tangent-lines | tri-lines")->required();
  solve->add_option("-i,--input", solveIn, "scene path")->required();

  std::string expGenerator, expFormula, expQuantity, expCsv, expJson;
  std::vector<std::string> expSweeps, expParams;
  std::uint64_t expSeed = 0;
  auto* experiment = app.add_subcommand("experiment", "sweep a generator and fit exponents");
  experiment->add_option("--generator", expGenerator, "generator name")->required();
  experiment->add_option("--sweep", expSweeps, "swept axis=v1,v2,... (repeatable, zipped)")
      ->required();
  experiment->add_option("--formula", expFormula, "bound formula name")->required();
  experiment->add_option("--quantity", expQuantity, "quantity (default: generator's designed)");
  experiment->add_option("--param", expParams, "fixed size parameter key=value");
  experiment->add_option("--seed", expSeed, "random seed");
  experiment->add_option("-o,--output", expCsv, "CSV output path (default stdout)");
  experiment->add_option("--json", expJson, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return runGen(genName, genParams, genSeed, genOut);
    if (count->parsed()) return runCountCmd(countQuantity, countIn, countExcludeZero, countD2);
    if (dual->parsed()) {
      if (!dualCheck) {
        std::cerr << "dual: nothing to do (pass --check)\n";
        return kExitUsage;
      }
      return runDualCheck(dualIn);
    }
    if (detect->parsed()) return runDetect(detectKind, detectIn, detectS, detectT);
    if (solve->parsed()) return runSolve(solveWhat, solveIn);
    if (experiment->parsed()) {
      return runExperimentCmd(expGenerator, expSweeps, expFormula, expQuantity, expParams, expSeed,
                              expCsv, expJson);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SceneParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
