#include "distlab/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "distlab/census.hpp"
#include "distlab/tangency.hpp"

namespace distlab {

namespace {

const std::pair<const char*, Quantity> kQuantityNames[] = {
    {"distinctPL", Quantity::DistinctPL},
    {"repeatedPL", Quantity::RepeatedPL},
    {"spannedLines", Quantity::SpannedLines},
    {"distinctSpanned", Quantity::DistinctSpanned},
    {"incidences", Quantity::Incidences},
    {"maxCollinear", Quantity::MaxCollinear},
    {"lineCircleTangencies", Quantity::LineCircleTangencies},
    {"circleTangentPairs", Quantity::CircleTangentPairs},
    {"circleTangencyPoints", Quantity::CircleTangencyPoints},
    {"planeSphereTangencies", Quantity::PlaneSphereTangencies},
    {"lineSphereTangencies", Quantity::LineSphereTangencies},
    {"distinctPP", Quantity::DistinctPP},
    {"distinctPL3", Quantity::DistinctPL3},
};

void require(bool present, const char* family) {
  if (!present) {
    throw std::invalid_argument(std::string("scene is missing the required family: ") + family);
  }
}

}  // namespace

QuantityRequest quantityFromName(const std::string& name) {
  if (name == "distinctPPpositive") {
    QuantityRequest r;
    r.quantity = Quantity::DistinctPP;
    r.options.excludeZero = true;
    return r;
  }
  for (const auto& [n, q] : kQuantityNames) {
    if (name == n) return QuantityRequest{q, {}};
  }
  throw std::invalid_argument("unknown quantity '" + name + "'");
}

std::string quantityName(Quantity q) {
  for (const auto& [n, k] : kQuantityNames) {
    if (k == q) return n;
  }
  return "?";
}

std::vector<std::string> quantityNames() {
  std::vector<std::string> names;
  for (const auto& [n, q] : kQuantityNames) names.emplace_back(n);
  names.emplace_back("distinctPPpositive");
  return names;
}

CountResult runCount(const Scene& scene, const QuantityRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  const ZeroDistances zeros =
      request.options.excludeZero ? ZeroDistances::Exclude : ZeroDistances::Include;
  std::uint64_t value = 0;
  switch (request.quantity) {
    case Quantity::DistinctPL:
      require(!scene.points2.empty(), "points2");
      require(!scene.lines2.empty(), "lines2");
      value = distinctPointLineDistances(scene.points2, scene.lines2, zeros).size();
      break;
    case Quantity::RepeatedPL: {
      require(!scene.points2.empty(), "points2");
      require(!scene.lines2.empty(), "lines2");
      if (!request.options.d2) {
        throw std::invalid_argument("repeatedPL requires a target squared distance (--d2)");
      }
      value = repeatedPointLineDistances(scene.points2, scene.lines2, *request.options.d2);
      break;
    }
    case Quantity::SpannedLines:
      require(!scene.points2.empty(), "points2");
      value = spannedLines(scene.points2).size();
      break;
    case Quantity::DistinctSpanned:
      require(!scene.points2.empty(), "points2");
      value = spannedDistanceCensus(scene.points2).size();
      break;
    case Quantity::Incidences:
      require(!scene.points2.empty(), "points2");
      require(!scene.lines2.empty(), "lines2");
      value = countIncidences(scene.points2, scene.lines2);
      break;
    case Quantity::MaxCollinear:
      if (!scene.points2.empty()) {
        value = maxCollinear(std::span<const Point2>(scene.points2));
      } else {
        require(!scene.points3.empty(), "points2 or points3");
        value = maxCollinear(std::span<const Point3>(scene.points3));
      }
      break;
    case Quantity::LineCircleTangencies:
      require(!scene.lines2.empty(), "lines2");
      require(!scene.circles2.empty(), "circles2");
      value = countLineCircleTangencies(scene.lines2, scene.circles2).pairCount;
      break;
    case Quantity::CircleTangentPairs:
      require(!scene.circles2.empty(), "circles2");
      value = countCircleTangencies(scene.circles2).pairCount;
      break;
    case Quantity::CircleTangencyPoints:
      require(!scene.circles2.empty(), "circles2");
      value = countCircleTangencies(scene.circles2).pointCount;
      break;
    case Quantity::PlaneSphereTangencies:
      require(!scene.planes3.empty(), "planes3");
      require(!scene.spheres3.empty(), "spheres3");
      value = countPlaneSphereTangencies(scene.planes3, scene.spheres3).pairCount;
      break;
    case Quantity::LineSphereTangencies:
      require(!scene.lines3.empty(), "lines3");
      require(!scene.spheres3.empty(), "spheres3");
      value = countLineSphereTangencies(scene.lines3, scene.spheres3).pairCount;
      break;
    case Quantity::DistinctPP:
      require(!scene.points3.empty(), "points3");
      require(!scene.planes3.empty(), "planes3");
      value = distinctPointPlaneDistances(scene.points3, scene.planes3, zeros).size();
      break;
    case Quantity::DistinctPL3:
      require(!scene.points3.empty(), "points3");
      require(!scene.lines3.empty(), "lines3");
      value = distinctPointLine3Distances(scene.points3, scene.lines3, zeros).size();
      break;
  }
  const auto end = std::chrono::steady_clock::now();
  return {value, std::chrono::duration<double, std::milli>(end - start).count()};
}

namespace {

const std::pair<const char*, BoundFormula> kFormulaNames[] = {
    {"D15_35", BoundFormula::D15_35}, {"T_23", BoundFormula::T_23},
    {"H_43", BoundFormula::H_43},     {"N32", BoundFormula::N32},
    {"PP_13", BoundFormula::PP_13},   {"PL3_14", BoundFormula::PL3_14},
    {"ceilHalfN", BoundFormula::CeilHalfN}, {"rst", BoundFormula::RST},
};

long sizeVar(const std::map<std::string, long>& sizes, const Scene& scene, const char* name) {
  if (const auto it = sizes.find(name); it != sizes.end()) return it->second;
  // Fall back to the scene's family counts under the paper's conventions:
  // m = points, n = lines (or planes), k = circles (or spheres).
  const std::string v(name);
  if (v == "m") {
    if (!scene.points2.empty()) return static_cast<long>(scene.points2.size());
    if (!scene.points3.empty()) return static_cast<long>(scene.points3.size());
    if (!scene.circles2.empty()) return static_cast<long>(scene.circles2.size());
  } else if (v == "n") {
    if (!scene.lines2.empty()) return static_cast<long>(scene.lines2.size());
    if (!scene.planes3.empty()) return static_cast<long>(scene.planes3.size());
    if (!scene.lines3.empty()) return static_cast<long>(scene.lines3.size());
    if (!scene.circles2.empty()) return static_cast<long>(scene.circles2.size());
  } else if (v == "k") {
    if (!scene.circles2.empty()) return static_cast<long>(scene.circles2.size());
    if (!scene.spheres3.empty()) return static_cast<long>(scene.spheres3.size());
  }
  throw std::invalid_argument("formula variable '" + v + "' not resolvable from sizes or scene");
}

double evalFormula(BoundFormula f, const std::map<std::string, long>& sizes, const Scene& scene) {
  auto var = [&](const char* name) { return static_cast<double>(sizeVar(sizes, scene, name)); };
  switch (f) {
    case BoundFormula::D15_35: return std::pow(var("m"), 0.2) * std::pow(var("n"), 0.6);
    case BoundFormula::T_23: return std::pow(var("n"), 2.0 / 3) * std::pow(var("k"), 2.0 / 3);
    case BoundFormula::H_43: return std::pow(var("m"), 4.0 / 3);
    case BoundFormula::N32: return std::pow(var("n"), 1.5);
    case BoundFormula::PP_13: return std::pow(var("m"), 1.0 / 3) * std::pow(var("n"), 1.0 / 3);
    case BoundFormula::PL3_14: return std::pow(var("m"), 0.25) * std::pow(var("n"), 0.25);
    case BoundFormula::CeilHalfN: return static_cast<double>((sizeVar(sizes, scene, "n") + 1) / 2);
    case BoundFormula::RST:
      return var("r") * var("s") * var("t");
  }
  return 0;
}

// The full Theorem 1.3 shape including the log-carrying middle term.
double evalT23WithLog(const std::map<std::string, long>& sizes, const Scene& scene) {
  const double n = static_cast<double>(sizeVar(sizes, scene, "n"));
  const double k = static_cast<double>(sizeVar(sizes, scene, "k"));
  return std::pow(n, 2.0 / 3) * std::pow(k, 2.0 / 3) +
         std::pow(n, 6.0 / 11) * std::pow(k, 9.0 / 11) * std::pow(std::log(std::max(2.0, k)), 2.0 / 11) +
         n + k;
}

ExponentFit fitExponent(const std::vector<double>& logx, const std::vector<double>& logy) {
  const std::size_t n = logx.size();
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += logx[i];
    sy += logy[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (logx[i] - mx) * (logx[i] - mx);
    sxy += (logx[i] - mx) * (logy[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("exponent fit: swept axis is constant");
  const double slope = sxy / sxx;
  double sse = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pred = my + slope * (logx[i] - mx);
    sse += (logy[i] - pred) * (logy[i] - pred);
  }
  const double stderr_ = n > 2 ? std::sqrt(sse / static_cast<double>(n - 2) / sxx) : 0.0;
  return {slope, stderr_, n};
}

}  // namespace

BoundFormula formulaFromName(const std::string& name) {
  for (const auto& [n, f] : kFormulaNames) {
    if (name == n) return f;
  }
  throw std::invalid_argument("unknown formula '" + name + "'");
}

std::string formulaName(BoundFormula f) {
  for (const auto& [n, k] : kFormulaNames) {
    if (k == f) return n;
  }
  return "?";
}

ExperimentReport runExperiment(const SweepSpec& sweep, const QuantityRequest& request,
                               BoundFormula formula) {
  if (sweep.axes.empty()) throw std::invalid_argument("runExperiment: no swept axis");
  const std::size_t count = sweep.axes.front().second.size();
  if (count == 0) throw std::invalid_argument("runExperiment: empty sweep");
  for (const auto& [axis, values] : sweep.axes) {
    if (values.size() != count) {
      throw std::invalid_argument("runExperiment: swept axes must have equal lengths (zipped)");
    }
  }

  ExperimentReport report;
  report.generator = generatorName(sweep.base.kind);
  report.quantity = quantityName(request.quantity);
  report.formula = formulaName(formula);

  std::vector<std::future<ExperimentRow>> futures;
  futures.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    futures.push_back(std::async(std::launch::async, [&, i]() {
      GeneratorSpec spec = sweep.base;
      for (const auto& [axis, values] : sweep.axes) spec.sizeParams[axis] = values[i];
      Scene scene;
      try {
        scene = generate(spec);
      } catch (const std::exception& e) {
        std::string sizes;
        for (const auto& [axis, values] : sweep.axes) {
          sizes += (sizes.empty() ? "" : ", ") + axis + "=" + std::to_string(values[i]);
        }
        throw std::runtime_error("generator failed at sweep point {" + sizes + "}: " + e.what());
      }
      ExperimentRow row;
      row.sizes = spec.sizeParams;
      const CountResult result = runCount(scene, request);
      row.observed = result.value;
      row.wallMs = result.wallMs;
      row.formulaValue = evalFormula(formula, row.sizes, scene);
      row.ratio = row.formulaValue > 0 ? static_cast<double>(row.observed) / row.formulaValue
                                       : std::numeric_limits<double>::quiet_NaN();
      row.formulaValueWithLog = formula == BoundFormula::T_23
                                    ? evalT23WithLog(row.sizes, scene)
                                    : std::numeric_limits<double>::quiet_NaN();
      return row;
    }));
  }
  for (auto& f : futures) report.rows.push_back(f.get());

  if (count >= 3) {
    for (const auto& [axis, values] : sweep.axes) {
      std::vector<double> lx, ly;
      for (std::size_t i = 0; i < count; ++i) {
        if (report.rows[i].observed == 0) continue;
        lx.push_back(std::log(static_cast<double>(values[i])));
        ly.push_back(std::log(static_cast<double>(report.rows[i].observed)));
      }
      if (lx.size() >= 3) report.fittedExponents[axis] = fitExponent(lx, ly);
    }
  }
  return report;
}

namespace {

std::vector<std::string> columnOrder(const ExperimentReport& report) {
  // Size columns first, conventional names leading.
  std::vector<std::string> cols;
  const char* preferred[] = {"m", "n", "k", "r", "s", "t"};
  if (!report.rows.empty()) {
    for (const char* p : preferred) {
      if (report.rows.front().sizes.count(p)) cols.emplace_back(p);
    }
    for (const auto& [key, value] : report.rows.front().sizes) {
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    }
  }
  return cols;
}

}  // namespace

std::string reportCsv(const ExperimentReport& report) {
  std::ostringstream out;
  const auto cols = columnOrder(report);
  for (const auto& c : cols) out << c << ",";
  out << "observed,formula,ratio,wall_time_ms\n";
  for (const ExperimentRow& row : report.rows) {
    for (const auto& c : cols) out << row.sizes.at(c) << ",";
    out << row.observed << "," << row.formulaValue << "," << row.ratio << "," << row.wallMs
        << "\n";
  }
  return out.str();
}

std::string reportJson(const ExperimentReport& report) {
  nlohmann::json doc;
  doc["generator"] = report.generator;
  doc["quantity"] = report.quantity;
  doc["formula"] = report.formula;
  doc["rows"] = nlohmann::json::array();
  for (const ExperimentRow& row : report.rows) {
    nlohmann::json r;
    for (const auto& [k, v] : row.sizes) r["sizes"][k] = v;
    r["observed"] = row.observed;
    r["formula"] = row.formulaValue;
    r["ratio"] = row.ratio;
    r["wall_time_ms"] = row.wallMs;
    if (!std::isnan(row.formulaValueWithLog)) r["formula_with_log"] = row.formulaValueWithLog;
    doc["rows"].push_back(std::move(r));
  }
  for (const auto& [axis, fit] : report.fittedExponents) {
    doc["fitted_exponents"][axis] = {{"exponent", fit.exponent},
                                     {"stderr", fit.stderr_},
                                     {"points", fit.points}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace distlab
