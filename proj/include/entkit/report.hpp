// Analysis report aggregation and serialization.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entkit/criteria.hpp"
#include "entkit/densecoding.hpp"
#include "entkit/measures.hpp"
#include "entkit/multipartite.hpp"

namespace entkit {

inline constexpr std::string_view kToolkitVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

struct StateDescriptor {
  std::string source;  // "catalog:<name>" or "file:<path>"
  std::string kind;    // "pure" | "density"
  std::string label;
  std::vector<std::size_t> dims;
  std::map<std::string, double> params;
};

struct AnalysisFailure {
  std::string analysis;
  std::string message;
};

struct MultipartiteSummary {
  BipartitionTable table;
  KSeparability separability;
  double ggm = 0.0;
  std::optional<double> tangle;  // three qubits only
  std::map<std::string, double> monogamy_scores;  // "<measure>:node<k>"
};

struct AnalysisReport {
  int schema_version = kReportSchemaVersion;
  std::string toolkit_version{kToolkitVersion};
  std::uint64_t seed = 0;
  StateDescriptor state;
  std::vector<CriterionVerdict> verdicts;
  std::vector<MeasureResult> measures;
  std::optional<DenseCodingReport> dense_coding;
  std::optional<MultipartiteSummary> multipartite;
  std::vector<AnalysisFailure> failures;
};

std::string report_to_json(const AnalysisReport& report);
std::string report_to_table(const AnalysisReport& report);

}  // namespace entkit
