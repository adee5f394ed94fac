#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "distlab/generators.hpp"
#include "distlab/rational.hpp"
#include "distlab/scene.hpp"

namespace distlab {

enum class Quantity {
  DistinctPL,
  RepeatedPL,
  SpannedLines,
  DistinctSpanned,
  Incidences,
  MaxCollinear,
  LineCircleTangencies,
  CircleTangentPairs,
  CircleTangencyPoints,
  PlaneSphereTangencies,
  LineSphereTangencies,
  DistinctPP,
  DistinctPL3,
};

struct CountOptions {
  bool excludeZero = false;
  std::optional<Rational> d2;  // RepeatedPL only
};

struct QuantityRequest {
  Quantity quantity = Quantity::DistinctPL;
  CountOptions options;
};

/// Resolves a CLI quantity token (e.g. "distinctPL", "circleTangentPairs",
/// "distinctPPpositive"). Throws on unknown names.
QuantityRequest quantityFromName(const std::string& name);
std::string quantityName(Quantity q);
std::vector<std::string> quantityNames();

struct CountResult {
  std::uint64_t value = 0;
  double wallMs = 0;
};

/// Runs one counting quantity against a scene; missing families are
/// reported by name.
CountResult runCount(const Scene& scene, const QuantityRequest& request);

/// Named bound formulas, evaluated with constant 1. The paper-facing six
/// plus the designed closed forms of the constructions.
enum class BoundFormula {
  D15_35,    // m^(1/5) n^(3/5)
  T_23,      // n^(2/3) k^(2/3)
  H_43,      // m^(4/3)
  N32,       // n^(3/2)
  PP_13,     // m^(1/3) n^(1/3)
  PL3_14,    // m^(1/4) n^(1/4)
  CeilHalfN, // ceil(n/2)
  RST,       // r*s*t
};

BoundFormula formulaFromName(const std::string& name);
std::string formulaName(BoundFormula f);

struct ExperimentRow {
  std::map<std::string, long> sizes;
  std::uint64_t observed = 0;
  double formulaValue = 0;
  double ratio = 0;
  double wallMs = 0;
  /// Theorem 1.3's log-carrying term, reported alongside the clean power
  /// formula when the formula is T_23; NaN otherwise.
  double formulaValueWithLog = 0;
};

struct ExponentFit {
  double exponent = 0;
  double stderr_ = 0;
  std::size_t points = 0;
};

struct ExperimentReport {
  std::string generator;
  std::string quantity;
  std::string formula;
  std::vector<ExperimentRow> rows;
  std::map<std::string, ExponentFit> fittedExponents;  // per swept axis
};

/// Swept axes are zipped: all value lists must have equal length, and sweep
/// point i takes the i-th entry of every axis.
struct SweepSpec {
  GeneratorSpec base;
  std::vector<std::pair<std::string, std::vector<long>>> axes;
};

/// Generates, counts and records one row per sweep point (points run
/// concurrently; the merge is ordered and deterministic). Exponents are
/// least-squares slopes of log(observed) against log(axis), fitted only
/// when at least 3 rows exist.
ExperimentReport runExperiment(const SweepSpec& sweep, const QuantityRequest& request,
                               BoundFormula formula);

std::string reportCsv(const ExperimentReport& report);
std::string reportJson(const ExperimentReport& report);

}  // namespace distlab
