#include "entkit/report.hpp"

#include <sstream>

#include "entkit/jsonio.hpp"

namespace entkit {

namespace {

using jsonio::Value;

Value verdict_json(const CriterionVerdict& v) {
  auto obj = Value::object();
  obj.set("criterion", Value::string(v.criterion));
  obj.set("outcome", Value::string(std::string(to_string(v.outcome))));
  obj.set("score", Value::number(v.score));
  obj.set("threshold", Value::number(v.threshold));
  auto details = Value::object();
  for (const auto& [k, val] : v.details) details.set(k, Value::number(val));
  obj.set("details", std::move(details));
  return obj;
}

Value measure_json(const MeasureResult& m) {
  auto obj = Value::object();
  obj.set("measure", Value::string(m.measure));
  obj.set("value", Value::number(m.value));
  obj.set("kind", Value::string(std::string(to_string(m.kind))));
  obj.set("method", Value::string(m.method));
  return obj;
}

Value split_json(const BipartiteSplit& split) {
  auto arr = Value::array();
  for (std::size_t p : split.party_a()) arr.push(Value::integer(static_cast<std::int64_t>(p)));
  return arr;
}

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
  auto doc = Value::object();
  doc.set("schema_version", Value::integer(report.schema_version));
  doc.set("toolkit_version", Value::string(report.toolkit_version));
  doc.set("seed", Value::integer(static_cast<std::int64_t>(report.seed)));

  auto state = Value::object();
  state.set("source", Value::string(report.state.source));
  state.set("kind", Value::string(report.state.kind));
  if (!report.state.label.empty()) state.set("label", Value::string(report.state.label));
  auto dims = Value::array();
  for (std::size_t d : report.state.dims) dims.push(Value::integer(static_cast<std::int64_t>(d)));
  state.set("dims", std::move(dims));
  auto params = Value::object();
  for (const auto& [k, v] : report.state.params) params.set(k, Value::number(v));
  state.set("params", std::move(params));
  doc.set("state", std::move(state));

  auto verdicts = Value::array();
  for (const auto& v : report.verdicts) verdicts.push(verdict_json(v));
  doc.set("criteria", std::move(verdicts));

  auto measures = Value::array();
  for (const auto& m : report.measures) measures.push(measure_json(m));
  doc.set("measures", std::move(measures));

  if (report.dense_coding) {
    auto dc = Value::object();
    dc.set("capacity_bits", Value::number(report.dense_coding->capacity));
    dc.set("advantage", Value::number(report.dense_coding->advantage));
    dc.set("class", Value::string(std::string(to_string(report.dense_coding->cls))));
    doc.set("dense_coding", std::move(dc));
  }

  if (report.multipartite) {
    const auto& mp = *report.multipartite;
    auto obj = Value::object();
    auto table = Value::array();
    for (const auto& e : mp.table.entries) {
      auto row = Value::object();
      row.set("party_a", split_json(e.split));
      row.set("schmidt_rank", Value::integer(static_cast<std::int64_t>(e.schmidt_rank)));
      row.set("max_coefficient", Value::number(e.max_coefficient));
      table.push(std::move(row));
    }
    obj.set("bipartitions", std::move(table));
    obj.set("k_separability", Value::integer(static_cast<std::int64_t>(mp.separability.k)));
    obj.set("genuine_multipartite", Value::boolean(mp.separability.genuine));
    obj.set("ggm", Value::number(mp.ggm));
    if (mp.tangle) obj.set("tangle", Value::number(*mp.tangle));
    auto mono = Value::object();
    for (const auto& [k, v] : mp.monogamy_scores) mono.set(k, Value::number(v));
    obj.set("monogamy_scores", std::move(mono));
    doc.set("multipartite", std::move(obj));
  }

  auto failures = Value::array();
  for (const auto& f : report.failures) {
    auto obj = Value::object();
    obj.set("analysis", Value::string(f.analysis));
    obj.set("message", Value::string(f.message));
    failures.push(std::move(obj));
  }
  doc.set("failures", std::move(failures));
  return doc.dump(2);
}

std::string report_to_table(const AnalysisReport& report) {
  std::ostringstream out;
  out.precision(12);
  out << "state: " << report.state.source;
  if (!report.state.label.empty()) out << " (" << report.state.label << ")";
  out << "  dims=[";
  for (std::size_t i = 0; i < report.state.dims.size(); ++i)
    out << (i ? "," : "") << report.state.dims[i];
  out << "]  seed=" << report.seed << "\n";

  if (!report.verdicts.empty()) {
    out << "\ncriteria:\n";
    for (const auto& v : report.verdicts) {
      out << "  " << v.criterion << ": " << to_string(v.outcome) << "  score=" << v.score
          << "  threshold=" << v.threshold << "\n";
    }
  }
  if (!report.measures.empty()) {
    out << "\nmeasures:\n";
    for (const auto& m : report.measures) {
      out << "  " << m.measure << " = " << m.value << "  (" << to_string(m.kind) << ")\n";
    }
  }
  if (report.dense_coding) {
    out << "\ndense coding: capacity=" << report.dense_coding->capacity
        << " bits, advantage=" << report.dense_coding->advantage << ", class "
        << to_string(report.dense_coding->cls) << "\n";
  }
  if (report.multipartite) {
    const auto& mp = *report.multipartite;
    out << "\nmultipartite: k=" << mp.separability.k
        << (mp.separability.genuine ? " (genuine)" : "") << "  ggm=" << mp.ggm;
    if (mp.tangle) out << "  tangle=" << *mp.tangle;
    out << "\n";
    for (const auto& [k, v] : mp.monogamy_scores) out << "  monogamy " << k << " = " << v << "\n";
  }
  if (!report.failures.empty()) {
    out << "\nfailures:\n";
    for (const auto& f : report.failures)
      out << "  " << f.analysis << ": " << f.message << "\n";
  }
  return out.str();
}

}  // namespace entkit
