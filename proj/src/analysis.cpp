#include "entkit/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "entkit/catalog.hpp"
#include "entkit/cmc.hpp"
#include "entkit/jsonio.hpp"
#include "entkit/linalg.hpp"
#include "entkit/witness.hpp"

namespace entkit {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

bool selected(const std::vector<std::string>& wanted, const std::string& name) {
  return wanted.empty() || std::find(wanted.begin(), wanted.end(), name) != wanted.end();
}

}  // namespace

const std::vector<std::string>& known_criteria() {
  static const std::vector<std::string> names{"ppt",  "majorization", "entropy", "ccnr",
                                              "cmc1", "cmc2",         "cmc3",    "chsh"};
  return names;
}

const std::vector<std::string>& known_measures() {
  static const std::vector<std::string> names{
      "entropy-of-entanglement", "concurrence", "eof",     "eof-roof",
      "negativity",              "log-negativity", "ree"};
  return names;
}

LoadedState resolve_state(const StateSpec& spec) {
  const bool has_catalog = !spec.catalog_name.empty();
  const bool has_file = !spec.file_path.empty();
  if (has_catalog == has_file)
    throw std::invalid_argument("state spec: give exactly one of catalog name or file path");
  if (has_file) return read_state_file(spec.file_path);
  CatalogState state = catalog(spec.catalog_name, spec.params);
  if (std::holds_alternative<PureState>(state))
    return {std::get<PureState>(state), spec.catalog_name};
  return {std::get<DensityMatrix>(state), spec.catalog_name};
}

namespace {

struct ResolvedInput {
  std::optional<PureState> pure;
  DensityMatrix density = DensityMatrix::maximally_mixed(DimensionList({2}));
  StateDescriptor descriptor;
};

ResolvedInput prepare(const StateSpec& spec) {
  LoadedState loaded = resolve_state(spec);
  ResolvedInput input;
  input.descriptor.source =
      spec.file_path.empty() ? "catalog:" + spec.catalog_name : "file:" + spec.file_path;
  input.descriptor.params = spec.params;
  input.descriptor.label = loaded.label;
  if (std::holds_alternative<PureState>(loaded.state)) {
    input.pure = std::get<PureState>(loaded.state);
    input.density = DensityMatrix::pure(*input.pure);
    input.descriptor.kind = "pure";
    input.descriptor.dims = input.pure->dims().dims();
  } else {
    input.density = std::get<DensityMatrix>(loaded.state);
    input.descriptor.kind = "density";
    input.descriptor.dims = input.density.dims().dims();
  }
  return input;
}

// Signed detection margin per analysis; positive means detected.  Continuous
// in the state, which is what the sweep bisection needs.
struct NamedVerdict {
  CriterionVerdict verdict;
  double margin = 0.0;
};

NamedVerdict run_criterion(const std::string& name, const DensityMatrix& rho,
                           std::uint64_t seed) {
  const BipartiteSplit split = BipartiteSplit::bipartite();
  NamedVerdict named;
  if (name == "ppt") {
    named.verdict = ppt_check(rho, split);
    named.margin = -named.verdict.score - tol::psd;
  } else if (name == "majorization") {
    named.verdict = majorization_check(rho, split);
    named.margin = named.verdict.score - tol::psd;
  } else if (name == "entropy") {
    named.verdict = entropy_check(rho, split);
    named.margin = -named.verdict.score - tol::detect;
  } else if (name == "ccnr") {
    named.verdict = ccnr_check(rho, split);
    named.margin = named.verdict.score - named.verdict.threshold - tol::detect;
  } else if (name == "cmc1") {
    named.verdict = cmc_corollary1(cmc_build(rho, split, false), rho);
    named.margin = named.verdict.score - tol::detect;
  } else if (name == "cmc2") {
    named.verdict = cmc_corollary2(cmc_build(rho, split, true), rho);
    named.margin = named.verdict.score - tol::detect;
  } else if (name == "cmc3") {
    named.verdict = cmc_corollary3(rho, split);
    named.margin = named.verdict.score - tol::detect;
  } else if (name == "chsh") {
    const auto best = chsh_maximize(rho, 32, mix_seed(seed, "chsh"));
    named.verdict.criterion = "chsh";
    named.verdict.score = best.value;
    named.verdict.threshold = 2.0;
    named.verdict.outcome =
        best.value > 2.0 + 1e-6 ? Outcome::Entangled : Outcome::NotDetected;
    named.verdict.details["max_violation"] = best.value;
    named.margin = best.value - 2.0 - 1e-6;
  } else {
    throw std::invalid_argument("unknown criterion '" + name + "'");
  }
  return named;
}

}  // namespace

AnalysisReport run_analysis(const StateSpec& spec, const Selection& selection,
                            std::uint64_t seed) {
  if (selection.criteria.empty() && selection.measures.empty() && !selection.dense_coding &&
      !selection.multipartite) {
    throw std::invalid_argument("run_analysis: selection is empty");
  }
  for (const auto& name : selection.criteria) {
    if (std::find(known_criteria().begin(), known_criteria().end(), name) ==
        known_criteria().end())
      throw std::invalid_argument("unknown criterion '" + name + "'");
  }
  for (const auto& name : selection.measures) {
    if (std::find(known_measures().begin(), known_measures().end(), name) ==
        known_measures().end())
      throw std::invalid_argument("unknown measure '" + name + "'");
  }

  ResolvedInput input = prepare(spec);
  AnalysisReport report;
  report.seed = seed;
  report.state = input.descriptor;

  const std::size_t parties = input.density.dims().parties();
  const bool bipartite = parties == 2;
  const BipartiteSplit split = BipartiteSplit::bipartite();
  const std::size_t da = bipartite ? input.density.dims()[0] : 0;
  const std::size_t db = bipartite ? input.density.dims()[1] : 0;
  const bool two_qubits = bipartite && da == 2 && db == 2;

  auto guarded = [&](const std::string& analysis, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      report.failures.push_back({analysis, e.what()});
    }
  };

  if (bipartite) {
    for (const auto& name : known_criteria()) {
      if (!selected(selection.criteria, name)) continue;
      if (name == "chsh" && !two_qubits) continue;
      guarded(name, [&] { report.verdicts.push_back(run_criterion(name, input.density, seed).verdict); });
    }

    if (input.pure && selected(selection.measures, "entropy-of-entanglement")) {
      guarded("entropy-of-entanglement",
              [&] { report.measures.push_back(entropy_of_entanglement(*input.pure, split)); });
    }
    if (two_qubits && selected(selection.measures, "concurrence")) {
      guarded("concurrence",
              [&] { report.measures.push_back(concurrence_mixed(input.density)); });
    }
    if (two_qubits && selected(selection.measures, "eof")) {
      guarded("eof", [&] { report.measures.push_back(eof_two_qubit(input.density)); });
    }
    if (da <= 4 && db <= 4 && selected(selection.measures, "eof-roof")) {
      guarded("eof-roof", [&] {
        RoofBudget budget;
        if (da * db > 4) {
          budget.restarts = 2;
          budget.sweeps = 8;
        }
        report.measures.push_back(
            eof_convex_roof_upper(input.density, split, budget, mix_seed(seed, "eof-roof")));
      });
    }
    if (selected(selection.measures, "negativity")) {
      guarded("negativity", [&] { report.measures.push_back(negativity(input.density, split)); });
    }
    if (selected(selection.measures, "log-negativity")) {
      guarded("log-negativity",
              [&] { report.measures.push_back(log_negativity(input.density, split)); });
    }
    if (da <= 3 && db <= 3 && selected(selection.measures, "ree")) {
      guarded("ree", [&] {
        // Larger systems converge to reporting precision in far fewer
        // conditional-gradient rounds; keep the interactive path snappy.
        ReeBudget budget;
        if (da * db > 4) budget.iterations = 250;
        report.measures.push_back(relative_entropy_of_entanglement_upper(
            input.density, split, budget, mix_seed(seed, "ree")));
      });
    }
    if (selection.dense_coding) {
      guarded("dense-coding",
              [&] { report.dense_coding = dc_capacity(input.density, split); });
    }
  }

  if (parties >= 3 && input.pure && selection.multipartite) {
    guarded("multipartite", [&] {
      MultipartiteSummary mp;
      mp.table = bipartition_table(*input.pure);
      mp.separability = k_separability_pure(*input.pure);
      mp.ggm = ggm(*input.pure);
      const bool three_qubits = input.pure->dims() == DimensionList({2, 2, 2});
      if (three_qubits) {
        mp.tangle = tangle(*input.pure);
        for (std::size_t node = 0; node < 3; ++node) {
          mp.monogamy_scores["sq-concurrence:node" + std::to_string(node)] =
              monogamy_score(*input.pure, node, MonogamyMeasure::SquaredConcurrence);
          mp.monogamy_scores["eof:node" + std::to_string(node)] =
              monogamy_score(*input.pure, node, MonogamyMeasure::Eof);
          mp.monogamy_scores["negativity:node" + std::to_string(node)] =
              monogamy_score(*input.pure, node, MonogamyMeasure::Negativity);
        }
      }
      report.multipartite = std::move(mp);
    });
  }
  return report;
}

namespace {

double margin_for(const std::string& analysis, const StateSpec& spec, std::uint64_t seed) {
  ResolvedInput input = prepare(spec);
  if (analysis == "dc") {
    const auto rep = dc_capacity(input.density, BipartiteSplit::bipartite());
    return rep.advantage - tol::detect;
  }
  return run_criterion(analysis, input.density, seed).margin;
}

}  // namespace

SweepResult sweep(const StateSpec& base, const std::string& parameter, double lo, double hi,
                  std::size_t points, const std::vector<std::string>& analyses,
                  std::uint64_t seed) {
  if (points < 2) throw std::invalid_argument("sweep: need at least two grid points");
  if (!(hi > lo)) throw std::invalid_argument("sweep: empty parameter interval");
  if (analyses.empty()) throw std::invalid_argument("sweep: no analyses selected");
  if (!base.file_path.empty())
    throw std::invalid_argument("sweep: parameter sweeps need a catalog state");
  for (const auto& a : analyses) {
    if (a != "dc" && std::find(known_criteria().begin(), known_criteria().end(), a) ==
                         known_criteria().end())
      throw std::invalid_argument("sweep: unknown analysis '" + a + "'");
  }

  auto at = [&](double value) {
    StateSpec spec = base;
    spec.params[parameter] = value;
    return spec;
  };

  SweepResult result;
  result.parameter = parameter;
  result.points.resize(points);

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points) return;
      const double value = lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(points - 1);
      SweepPoint point;
      point.parameter = value;
      for (const auto& a : analyses) {
        const double margin = margin_for(a, at(value), seed);
        point.margins[a] = margin;
        point.outcomes[a] = margin > 0.0 ? "detected" : "not_detected";
      }
      result.points[i] = std::move(point);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w + 1 < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  // Bisect every sign change of each margin to 1e-4 in the parameter.
  for (const auto& a : analyses) {
    for (std::size_t i = 0; i + 1 < points; ++i) {
      double x0 = result.points[i].parameter;
      double x1 = result.points[i + 1].parameter;
      double m0 = result.points[i].margins.at(a);
      double m1 = result.points[i + 1].margins.at(a);
      if ((m0 > 0.0) == (m1 > 0.0)) continue;
      while (x1 - x0 > 1e-4) {
        const double mid = 0.5 * (x0 + x1);
        const double mm = margin_for(a, at(mid), seed);
        if ((mm > 0.0) == (m0 > 0.0)) {
          x0 = mid;
          m0 = mm;
        } else {
          x1 = mid;
          m1 = mm;
        }
      }
      result.crossings.push_back({a, 0.5 * (x0 + x1), m1 > 0.0});
    }
  }
  return result;
}

std::string sweep_to_json(const SweepResult& result) {
  using jsonio::Value;
  auto doc = Value::object();
  doc.set("parameter", Value::string(result.parameter));
  auto pts = Value::array();
  for (const auto& p : result.points) {
    auto row = Value::object();
    row.set(result.parameter, Value::number(p.parameter));
    auto margins = Value::object();
    for (const auto& [k, v] : p.margins) margins.set(k, Value::number(v));
    row.set("margins", std::move(margins));
    auto outcomes = Value::object();
    for (const auto& [k, v] : p.outcomes) outcomes.set(k, Value::string(v));
    row.set("outcomes", std::move(outcomes));
    pts.push(std::move(row));
  }
  doc.set("points", std::move(pts));
  auto crossings = Value::array();
  for (const auto& c : result.crossings) {
    auto row = Value::object();
    row.set("analysis", Value::string(c.analysis));
    row.set(result.parameter, Value::number(c.parameter));
    row.set("direction", Value::string(c.rising ? "onset" : "offset"));
    crossings.push(std::move(row));
  }
  doc.set("thresholds", std::move(crossings));
  return doc.dump(2);
}

std::string sweep_to_table(const SweepResult& result) {
  std::ostringstream out;
  out.precision(10);
  out << result.parameter;
  if (!result.points.empty()) {
    for (const auto& [name, _] : result.points.front().margins) out << "\t" << name;
  }
  out << "\n";
  for (const auto& p : result.points) {
    out << p.parameter;
    for (const auto& [_, margin] : p.margins)
      out << "\t" << margin << (margin > 0.0 ? " (detected)" : "");
    out << "\n";
  }
  if (!result.crossings.empty()) {
    out << "\nthresholds:\n";
    for (const auto& c : result.crossings)
      out << "  " << c.analysis << " " << (c.rising ? "onset" : "offset") << " at "
          << result.parameter << " = " << c.parameter << "\n";
  }
  return out.str();
}

}  // namespace entkit
