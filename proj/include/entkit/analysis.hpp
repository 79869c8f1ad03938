// Analysis orchestration: state resolution, report assembly, and parameter
// sweeps with threshold location.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entkit/report.hpp"
#include "entkit/state_io.hpp"

namespace entkit {

struct StateSpec {
  std::string catalog_name;              // either this ...
  std::map<std::string, double> params;
  std::string file_path;                 // ... or this
};

struct Selection {
  std::vector<std::string> criteria;  // empty = every applicable criterion
  std::vector<std::string> measures;  // empty = every applicable measure
  bool dense_coding = true;
  bool multipartite = true;
};

// Names accepted in Selection::criteria / Selection::measures.
const std::vector<std::string>& known_criteria();
const std::vector<std::string>& known_measures();

LoadedState resolve_state(const StateSpec& spec);

// Deterministic given the seed; individual analysis failures are recorded in
// the report, never fatal.
AnalysisReport run_analysis(const StateSpec& spec, const Selection& selection,
                            std::uint64_t seed);

struct SweepPoint {
  double parameter = 0.0;
  // analysis -> (margin, outcome); margin > 0 means "detected".
  std::map<std::string, double> margins;
  std::map<std::string, std::string> outcomes;
};

struct SweepCrossing {
  std::string analysis;
  double parameter = 0.0;  // bisection-refined to 1e-4
  bool rising = true;      // detection turns on with increasing parameter
};

struct SweepResult {
  std::string parameter;
  std::vector<SweepPoint> points;
  std::vector<SweepCrossing> crossings;
};

// Evaluates the selected analyses over an inclusive uniform grid and refines
// every detection-boundary crossing by bisection.  Grid points run
// concurrently.
SweepResult sweep(const StateSpec& base, const std::string& parameter, double lo, double hi,
                  std::size_t points, const std::vector<std::string>& analyses,
                  std::uint64_t seed);

std::string sweep_to_json(const SweepResult& result);
std::string sweep_to_table(const SweepResult& result);

}  // namespace entkit
