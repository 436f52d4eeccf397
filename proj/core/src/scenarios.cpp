#include "qlbn/scenarios.hpp"

#include <cmath>
#include <algorithm>
#include <map>

#include "qlbn/errors.hpp"

namespace qlbn {

namespace {

void check_probability(double p, const std::string& scenario, const char* field) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw Error(ErrorKind::InvalidArgument,
                "scenario '" + scenario + "': " + field + " = " + std::to_string(p) + " outside [0,1]");
  }
}

}  // namespace

void validate_scenario(const Scenario& s) {
  if (s.p_defect_given_defect) check_probability(*s.p_defect_given_defect, s.name, "p_defect_given_defect");
  if (s.p_defect_given_cooperate) {
    check_probability(*s.p_defect_given_cooperate, s.name, "p_defect_given_cooperate");
  }
  check_probability(s.observed_unknown, s.name, "observed_unknown");
  check_probability(s.prior_defect, s.name, "prior_defect");
}

Network scenario_to_network(const Scenario& s) {
  validate_scenario(s);
  if (!s.has_conditionals()) {
    throw Error(ErrorKind::MissingConditionals,
                "scenario '" + s.name + "' has no conditional defection probabilities");
  }
  const double dd = *s.p_defect_given_defect;
  const double dc = *s.p_defect_given_cooperate;
  return NetworkBuilder()
      .add_variable(kFirstPlayer, {kCooperate, kDefect})
      .add_variable(kSecondPlayer, {kDefect, kCooperate})
      .add_edge(kFirstPlayer, kSecondPlayer)
      .set_prior(kFirstPlayer, {{kDefect, s.prior_defect}, {kCooperate, 1.0 - s.prior_defect}})
      .set_cpt_row(kSecondPlayer, {{kFirstPlayer, kDefect}}, {{kDefect, dd}, {kCooperate, 1.0 - dd}})
      .set_cpt_row(kSecondPlayer, {{kFirstPlayer, kCooperate}}, {{kDefect, dc}, {kCooperate, 1.0 - dc}})
      .build();
}

double fit_error(double predicted, double observed) {
  if (observed == 0.0) throw Error(ErrorKind::ZeroObserved, "fit error is undefined for an observed value of 0");
  return std::abs(predicted - observed) / observed;
}

PredictionRecord predict_unknown(const Scenario& s) {
  const Network net = scenario_to_network(s);
  const AmplitudeNetwork anet = amplitudes_from_network(net);

  PredictionRecord r;
  r.scenario = s.name;
  r.observed = s.observed_unknown;
  r.classical_prediction = infer(net, kSecondPlayer, {}).at(kDefect);
  r.trace = trace_degree(anet, kSecondPlayer, {});
  r.belief_degree = r.trace.degree;
  r.quantum = quantum_infer(anet, kSecondPlayer, {}, constant_degree(r.belief_degree.value));
  r.quantum_prediction = r.quantum.probability(kDefect);
  r.fit_error_classical = fit_error(r.classical_prediction, r.observed);
  r.fit_error_quantum = fit_error(r.quantum_prediction, r.observed);
  return r;
}

ComparisonReport run_comparison(std::span<const Scenario> scenarios, std::span<const LiteratureRow> literature) {
  if (scenarios.empty()) throw Error(ErrorKind::InvalidArgument, "no scenarios to compare");

  ComparisonReport report;
  std::vector<std::string> columns = {"classical", "quantum"};
  std::map<std::string, std::pair<double, int>> sums;

  for (const auto& s : scenarios) {
    PredictionRecord r = predict_unknown(s);
    for (const auto& row : literature) {
      if (row.scenario != s.name) continue;
      for (const auto& m : row.models) {
        r.literature_comparisons.push_back(m);
        if (std::find(columns.begin(), columns.end(), m.model) == columns.end()) columns.push_back(m.model);
      }
    }
    sums["classical"].first += r.fit_error_classical;
    sums["classical"].second += 1;
    sums["quantum"].first += r.fit_error_quantum;
    sums["quantum"].second += 1;
    for (const auto& m : r.literature_comparisons) {
      sums[m.model].first += m.fit_error;
      sums[m.model].second += 1;
    }
    report.records.push_back(std::move(r));
  }
  for (const auto& column : columns) {
    const auto& [sum, count] = sums[column];
    report.average_fit_errors.emplace_back(column, sum / count);
  }
  return report;
}

const char* const kPayoffNote =
    "payoffs A/B with 0 = cooperate, 1 = defect: (0,0) 4/4, (0,1) 2/5, (1,0) 5/2, (1,1) 3/3";

std::vector<Scenario> builtin_scenarios() {
  auto row = [](std::string name, double dd, double dc, double observed) {
    return Scenario{std::move(name), dd, dc, observed, 0.5, std::string(kPayoffNote)};
  };
  return {
      row("Shafir and Tversky, 1992", 0.97, 0.84, 0.63),
      row("Li and Taplin, 2002", 0.82, 0.77, 0.72),
      row("Busemeyer et al., 2006a", 0.91, 0.84, 0.66),
      row("Hristova and Grinberg, 2008", 0.97, 0.93, 0.88),
      row("Average", 0.87, 0.74, 0.64),
  };
}

std::vector<Scenario> builtin_comparison_scenarios() {
  auto placeholder = [](std::string name, double observed) {
    return Scenario{std::move(name), std::nullopt, std::nullopt, observed, 0.5, std::nullopt};
  };
  const auto table = builtin_scenarios();
  return {
      placeholder("Li and Taplin, 2002 (1)", 0.8667),
      placeholder("Li and Taplin, 2002 (2)", 0.7000),
      placeholder("Li and Taplin, 2002 (3)", 0.7667),
      table[2],
      table[3],
  };
}

std::vector<LiteratureRow> builtin_literature() {
  auto row = [](std::string name, double observed, double m1, double f1, double m2, double f2, double p, double fp) {
    return LiteratureRow{std::move(name),
                         observed,
                         {{kModelQpdt, m1, f1}, {kModelDynamic, m2, f2}, {kModelPublished, p, fp}}};
  };
  return {
      row("Li and Taplin, 2002 (1)", 0.8667, 0.6334, 0.2692, 0.8113, 0.0639, 0.8623, 0.0051),
      row("Li and Taplin, 2002 (2)", 0.7000, 0.5333, 0.2381, 0.7006, 0.0009, 0.6691, 0.0441),
      row("Li and Taplin, 2002 (3)", 0.7667, 0.5500, 0.2826, 0.7159, 0.0663, 0.7005, 0.0863),
      row("Busemeyer et al., 2006a", 0.6600, 0.6250, 0.0531, 0.7995, 0.2113, 0.6069, 0.0805),
      row("Hristova and Grinberg, 2008", 0.8800, 0.7000, 0.2045, 0.8968, 0.0191, 0.9045, 0.0279),
  };
}

std::vector<std::pair<std::string, double>> builtin_literature_averages() {
  return {{kModelQpdt, 0.2095}, {kModelDynamic, 0.0723}, {kModelPublished, 0.04878}};
}

}  // namespace qlbn
