#include "qlbn/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "qlbn/errors.hpp"
#include "qlbn/numeric.hpp"

namespace qlbn {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width(header_.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(header_);
    for (const auto& row : rows_) widen(row);

    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < width.size(); ++i) {
        const std::string cell = i < row.size() ? row[i] : "";
        const std::string pad(width[i] - cell.size(), ' ');
        if (i) out << "  ";
        // First column left-aligned, the rest right-aligned.
        out << (i == 0 ? cell + pad : pad + cell);
      }
      out << "\n";
    };
    line(header_);
    std::size_t total = 0;
    for (auto w : width) total += w;
    out << std::string(total + 2 * (width.size() - 1), '-') << "\n";
    for (const auto& row : rows_) line(row);
    return out.str();
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += csv_escape(fields[i]);
  }
  return out + "\n";
}

std::string fixed(double v) { return format_fixed(v, 5); }

std::vector<std::string> literature_models(const ComparisonReport& report) {
  std::vector<std::string> models;
  for (const auto& r : report.records) {
    for (const auto& m : r.literature_comparisons) {
      if (std::find(models.begin(), models.end(), m.model) == models.end()) models.push_back(m.model);
    }
  }
  return models;
}

const ModelComparison* find_model(const PredictionRecord& r, const std::string& model) {
  for (const auto& m : r.literature_comparisons) {
    if (m.model == model) return &m;
  }
  return nullptr;
}

ordered_json trace_json(const DegreeTrace& trace) {
  ordered_json j;
  j["outcome_vectors"] = ordered_json::array();
  for (std::size_t i = 0; i < trace.pairs.size(); ++i) {
    j["outcome_vectors"].push_back({{"outcome", trace.pairs[i].outcome},
                                    {"alpha", trace.pairs[i].alpha},
                                    {"beta", trace.pairs[i].beta},
                                    {"belief_distance", trace.distances[i].value}});
  }
  j["belief_degree_raw"] = trace.degree.raw;
  j["belief_degree"] = trace.degree.value;
  j["belief_degree_clamped"] = trace.degree.clamped();
  return j;
}

ordered_json quantum_json(const QuantumInferenceResult& result, const DegreeTrace* trace) {
  ordered_json j;
  j["query"] = result.query;
  j["normalizer"] = result.normalizer;
  j["clamped"] = result.any_clamped();
  j["outcomes"] = ordered_json::array();
  for (const auto& t : result.outcomes) {
    j["outcomes"].push_back({{"outcome", t.outcome},
                             {"magnitudes", t.magnitudes},
                             {"degree", t.degree},
                             {"classical_part", t.classical_part},
                             {"interference_part", t.interference_part},
                             {"unnormalized", t.unnormalized},
                             {"probability", t.probability},
                             {"clamped", t.clamped}});
  }
  if (trace) j["heuristic"] = trace_json(*trace);
  return j;
}

ordered_json record_json(const PredictionRecord& r) {
  ordered_json j;
  j["scenario"] = r.scenario;
  j["observed"] = r.observed;
  j["classical"] = r.classical_prediction;
  j["quantum"] = r.quantum_prediction;
  j["degree"] = r.belief_degree.value;
  j["degree_raw"] = r.belief_degree.raw;
  j["fit_classical"] = r.fit_error_classical;
  j["fit_quantum"] = r.fit_error_quantum;
  if (!r.literature_comparisons.empty()) {
    j["literature"] = ordered_json::array();
    for (const auto& m : r.literature_comparisons) {
      j["literature"].push_back({{"model", m.model}, {"predicted", m.predicted}, {"fit_error", m.fit_error}});
    }
  }
  return j;
}

ordered_json report_json(const ComparisonReport& report) {
  ordered_json j;
  j["records"] = ordered_json::array();
  for (const auto& r : report.records) j["records"].push_back(record_json(r));
  j["average_fit_errors"] = ordered_json::object();
  for (const auto& [column, value] : report.average_fit_errors) j["average_fit_errors"][column] = value;
  return j;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw Error(ErrorKind::InvalidArgument, "unknown output format '" + std::string(text) + "'");
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (c != '\r' && c != '\n') {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

std::string render_entropy(double shannon, double deng, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table:
      return "shannon=" + fixed(shannon) + " deng=" + fixed(deng) + "\n";
    case OutputFormat::Csv:
      return "shannon,deng\n" + format_exact(shannon) + "," + format_exact(deng) + "\n";
    case OutputFormat::Json: {
      ordered_json j = {{"shannon", shannon}, {"deng", deng}};
      return j.dump(2) + "\n";
    }
  }
  return {};
}

std::string render_distribution(const DiscreteDistribution& dist, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: {
      TextTable table({"outcome", "probability"});
      for (std::size_t i = 0; i < dist.size(); ++i) table.add({dist.labels()[i], fixed(dist.probabilities()[i])});
      return table.render();
    }
    case OutputFormat::Csv: {
      std::string out = "outcome,probability\n";
      for (std::size_t i = 0; i < dist.size(); ++i) {
        out += csv_line({dist.labels()[i], format_exact(dist.probabilities()[i])});
      }
      return out;
    }
    case OutputFormat::Json: {
      ordered_json j = ordered_json::object();
      for (std::size_t i = 0; i < dist.size(); ++i) j[dist.labels()[i]] = dist.probabilities()[i];
      return j.dump(2) + "\n";
    }
  }
  return {};
}

std::string quantum_result_to_json(const QuantumInferenceResult& result, const DegreeTrace* trace) {
  return quantum_json(result, trace).dump(2) + "\n";
}

std::string render_quantum(const QuantumInferenceResult& result, const DegreeTrace* trace, OutputFormat format,
                           bool verbose) {
  switch (format) {
    case OutputFormat::Json:
      return quantum_result_to_json(result, trace);
    case OutputFormat::Csv: {
      std::string out = "outcome,probability,classical_part,interference_part,unnormalized,degree,clamped\n";
      for (const auto& t : result.outcomes) {
        out += csv_line({t.outcome, format_exact(t.probability), format_exact(t.classical_part),
                         format_exact(t.interference_part), format_exact(t.unnormalized), format_exact(t.degree),
                         t.clamped ? "1" : "0"});
      }
      return out;
    }
    case OutputFormat::Table:
      break;
  }

  std::ostringstream out;
  if (!verbose) {
    TextTable table({"outcome", "probability"});
    for (const auto& t : result.outcomes) table.add({t.outcome, fixed(t.probability)});
    out << table.render();
    if (result.any_clamped()) out << "warning: negative mass clamped to zero\n";
    return out.str();
  }

  if (trace) {
    TextTable vectors({"outcome", "alpha", "beta", "belief_distance"});
    for (std::size_t i = 0; i < trace->pairs.size(); ++i) {
      vectors.add({trace->pairs[i].outcome, fixed(trace->pairs[i].alpha), fixed(trace->pairs[i].beta),
                   fixed(trace->distances[i].value)});
    }
    out << vectors.render();
    out << "belief degree: raw=" << fixed(trace->degree.raw) << " clamped=" << fixed(trace->degree.value)
        << (trace->degree.clamped() ? " (clamped)" : "") << "\n\n";
  }
  TextTable table({"outcome", "classical", "interference", "unnormalized", "degree", "probability"});
  for (const auto& t : result.outcomes) {
    table.add({t.outcome, fixed(t.classical_part), fixed(t.interference_part), fixed(t.unnormalized), fixed(t.degree),
               fixed(t.probability) + (t.clamped ? " (clamped)" : "")});
  }
  out << table.render();
  out << "normalizer: " << fixed(result.normalizer) << "\n";
  return out.str();
}

std::string render_report(const ComparisonReport& report, OutputFormat format) {
  const auto models = literature_models(report);
  switch (format) {
    case OutputFormat::Json:
      return report_json(report).dump(2) + "\n";
    case OutputFormat::Csv: {
      std::vector<std::string> header = {"scenario", "observed", "classical", "quantum",
                                         "degree",   "fit_classical", "fit_quantum"};
      for (const auto& m : models) {
        header.push_back(m + "_predicted");
        header.push_back(m + "_fit");
      }
      std::string out = csv_line(header);
      for (const auto& r : report.records) {
        std::vector<std::string> row = {r.scenario,
                                        format_exact(r.observed),
                                        format_exact(r.classical_prediction),
                                        format_exact(r.quantum_prediction),
                                        format_exact(r.belief_degree.value),
                                        format_exact(r.fit_error_classical),
                                        format_exact(r.fit_error_quantum)};
        for (const auto& m : models) {
          const ModelComparison* c = find_model(r, m);
          row.push_back(c ? format_exact(c->predicted) : "");
          row.push_back(c ? format_exact(c->fit_error) : "");
        }
        out += csv_line(row);
      }
      return out;
    }
    case OutputFormat::Table:
      break;
  }

  std::vector<std::string> header = {"scenario", "observed", "classical", "quantum",
                                     "degree",   "fit_classical", "fit_quantum"};
  for (const auto& m : models) {
    header.push_back(m);
    header.push_back("fit_" + m);
  }
  TextTable table(header);
  for (const auto& r : report.records) {
    std::vector<std::string> row = {r.scenario,
                                    fixed(r.observed),
                                    fixed(r.classical_prediction),
                                    fixed(r.quantum_prediction),
                                    fixed(r.belief_degree.value),
                                    fixed(r.fit_error_classical),
                                    fixed(r.fit_error_quantum)};
    for (const auto& m : models) {
      const ModelComparison* c = find_model(r, m);
      row.push_back(c ? fixed(c->predicted) : "-");
      row.push_back(c ? fixed(c->fit_error) : "-");
    }
    table.add(std::move(row));
  }
  std::vector<std::string> avg = {"average fit error", "-", "-", "-", "-"};
  for (const auto& [column, value] : report.average_fit_errors) {
    if (column == "classical" || column == "quantum") avg.push_back(fixed(value));
  }
  for (const auto& m : models) {
    avg.push_back("-");
    for (const auto& [column, value] : report.average_fit_errors) {
      if (column == m) avg.push_back(fixed(value));
    }
  }
  table.add(std::move(avg));
  return table.render();
}

bool GoldenCheck::passed() const { return std::abs(actual - expected) <= tolerance; }

bool Reproduction::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const GoldenCheck& c) { return c.passed(); });
}

std::vector<GoldenCheck> Reproduction::failures() const {
  std::vector<GoldenCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const GoldenCheck& c) { return !c.passed(); });
  return out;
}

Reproduction run_reproduction() {
  Reproduction r;
  const auto scenarios = builtin_scenarios();
  r.literature = builtin_literature();
  r.table = run_comparison(scenarios, {});

  r.comparison_scenarios = builtin_comparison_scenarios();
  std::vector<Scenario> reproducible;
  std::copy_if(r.comparison_scenarios.begin(), r.comparison_scenarios.end(), std::back_inserter(reproducible),
               [](const Scenario& s) { return s.has_conditionals(); });
  r.comparison = run_comparison(reproducible, r.literature);

  auto check = [&](std::string name, double expected, double actual, double tolerance) {
    r.checks.push_back({std::move(name), expected, actual, tolerance});
  };

  // Worked example on the averaged data.
  const PredictionRecord& average = r.table.records.back();
  const auto& trace = average.trace;
  auto pair_for = [&](const char* outcome) -> const OutcomeVectorPair& {
    for (const auto& p : trace.pairs) {
      if (p.outcome == outcome) return p;
    }
    throw Error(ErrorKind::UnknownOutcome, outcome);
  };
  check("Average alpha(Cooperate)", 0.3606, pair_for(kCooperate).alpha, 1e-4);
  check("Average beta(Cooperate)", 0.2550, pair_for(kCooperate).beta, 1e-4);
  check("Average alpha(Defect)", 0.6083, pair_for(kDefect).alpha, 1e-4);
  check("Average beta(Defect)", 0.6595, pair_for(kDefect).beta, 1e-4);
  // Each later link is evaluated on the published, 4-decimal rounded output
  // of the previous link, which is how the published chain was computed.
  check("Average distance(0.6083, 0.6595)", 0.41711, belief_distance(0.6083, 0.6595).value, 5e-5);
  check("Average distance(0.3606, 0.2550)", 0.63531, belief_distance(0.3606, 0.2550).value, 5e-5);
  const std::vector<BeliefDistance> published_distances = {{0.41711}, {0.63531}};
  check("Average belief degree(0.41711, 0.63531)", -0.9420, belief_degree(published_distances).value, 5e-4);
  check("Average belief degree", -0.9420, average.belief_degree.value, 5e-4);
  const auto at_published_degree =
      quantum_infer(amplitudes_from_network(scenario_to_network(scenarios.back())), kSecondPlayer, {},
                    constant_degree(-0.9420));
  auto unnormalized_for = [&](const char* outcome) {
    for (const auto& t : at_published_degree.outcomes) {
      if (t.outcome == outcome) return t.unnormalized;
    }
    throw Error(ErrorKind::UnknownOutcome, outcome);
  };
  check("Average unnormalized(Defect) at degree -0.9420", 0.04917, unnormalized_for(kDefect), 5e-5);
  check("Average unnormalized(Cooperate) at degree -0.9420", 0.02182, unnormalized_for(kCooperate), 5e-5);
  check("Average Pr(Defect)", 0.6926, average.quantum_prediction, 5e-4);
  check("Average fit error", 0.082, average.fit_error_quantum, 1e-3);

  const double classical[] = {0.9050, 0.7950, 0.8750, 0.9500, 0.8050};
  for (std::size_t i = 0; i < r.table.records.size(); ++i) {
    check(r.table.records[i].scenario + " classical", classical[i], r.table.records[i].classical_prediction, 1e-4);
  }

  for (const auto& rec : r.comparison.records) {
    for (const auto& m : rec.literature_comparisons) {
      if (m.model == kModelPublished) check(rec.scenario + " quantum", m.predicted, rec.quantum_prediction, 5e-3);
    }
  }
  return r;
}

std::string reproduction_series_csv(const Reproduction& r) {
  std::string out = "figure,scenario,series,value\n";
  for (const auto& rec : r.table.records) {
    out += csv_line({"observed_vs_predicted", rec.scenario, "observed", format_exact(rec.observed)});
    out += csv_line({"observed_vs_predicted", rec.scenario, "classical", format_exact(rec.classical_prediction)});
    out += csv_line({"observed_vs_predicted", rec.scenario, "quantum", format_exact(rec.quantum_prediction)});
  }
  for (const auto& row : r.literature) {
    out += csv_line({"model_comparison", row.scenario, "observed", format_exact(row.observed)});
    for (const auto& m : row.models) {
      out += csv_line({"model_comparison", row.scenario, m.model, format_exact(m.predicted)});
    }
    for (const auto& rec : r.comparison.records) {
      if (rec.scenario == row.scenario) {
        out += csv_line({"model_comparison", row.scenario, "quantum", format_exact(rec.quantum_prediction)});
      }
    }
  }
  return out;
}

std::string render_reproduction(const Reproduction& r, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["table"] = report_json(r.table);
    j["comparison"] = report_json(r.comparison);
    j["published_average_fit_errors"] = ordered_json::object();
    for (const auto& [model, value] : builtin_literature_averages()) j["published_average_fit_errors"][model] = value;
    j["not_reproducible"] = ordered_json::array();
    for (const auto& s : r.comparison_scenarios) {
      if (!s.has_conditionals()) j["not_reproducible"].push_back(s.name);
    }
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) {
      j["checks"].push_back({{"name", c.name},
                             {"expected", c.expected},
                             {"actual", c.actual},
                             {"tolerance", c.tolerance},
                             {"passed", c.passed()}});
    }
    j["passed"] = r.passed();
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::Csv) {
    std::string out = "check,expected,actual,tolerance,passed\n";
    for (const auto& c : r.checks) {
      out += csv_line({c.name, format_exact(c.expected), format_exact(c.actual), format_exact(c.tolerance),
                       c.passed() ? "1" : "0"});
    }
    out += "\n" + render_report(r.table, OutputFormat::Csv);
    out += "\n" + reproduction_series_csv(r);
    return out;
  }

  std::ostringstream out;
  out << "Prisoner's dilemma: observed vs predicted Pr(P2 = Defect) under the unknown condition\n\n";
  out << render_report(r.table, OutputFormat::Table) << "\n";

  out << "Model comparison (QPDT and DynamicQLBN figures are published values)\n\n";
  TextTable table({"scenario", "observed", "QPDT", "fit_QPDT", "DynamicQLBN", "fit_DynamicQLBN", "published",
                   "fit_published", "quantum", "fit_quantum"});
  for (const auto& row : r.literature) {
    std::vector<std::string> cells = {row.scenario, fixed(row.observed)};
    for (const char* model : {kModelQpdt, kModelDynamic, kModelPublished}) {
      const auto it = std::find_if(row.models.begin(), row.models.end(),
                                   [&](const ModelComparison& m) { return m.model == model; });
      cells.push_back(it != row.models.end() ? fixed(it->predicted) : "-");
      cells.push_back(it != row.models.end() ? fixed(it->fit_error) : "-");
    }
    const auto rec = std::find_if(r.comparison.records.begin(), r.comparison.records.end(),
                                  [&](const PredictionRecord& p) { return p.scenario == row.scenario; });
    cells.push_back(rec != r.comparison.records.end() ? fixed(rec->quantum_prediction) : "n/a");
    cells.push_back(rec != r.comparison.records.end() ? fixed(rec->fit_error_quantum) : "n/a");
    table.add(std::move(cells));
  }
  std::vector<std::string> avg = {"average fit error", "-"};
  for (const auto& [model, value] : builtin_literature_averages()) {
    avg.push_back("-");
    avg.push_back(fixed(value));
  }
  avg.push_back("-");
  for (const auto& [column, value] : r.comparison.average_fit_errors) {
    if (column == "quantum") avg.push_back(fixed(value));
  }
  table.add(std::move(avg));
  out << table.render();
  out << "n/a: conditional defection probabilities for these experiments are not published;\n"
         "     they are excluded from the golden checks (supply them via `qlbn predict`).\n\n";

  out << "Golden checks\n\n";
  TextTable checks({"check", "expected", "actual", "tolerance", "status"});
  for (const auto& c : r.checks) {
    char tol[32];
    std::snprintf(tol, sizeof tol, "%g", c.tolerance);
    checks.add({c.name, fixed(c.expected), fixed(c.actual), tol, c.passed() ? "ok" : "FAIL"});
  }
  out << checks.render();
  out << (r.passed() ? "all golden checks passed\n" : "golden check failures present\n");
  return out.str();
}

}  // namespace qlbn
