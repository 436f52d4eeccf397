// qlbn: classical and quantum-like Bayesian network inference for
// prisoner's dilemma data.
//
// Exit codes: 0 success, 1 validation error, 2 inference error,
// 3 golden mismatch (reproduce).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlbn/bba_io.hpp"
#include "qlbn/errors.hpp"
#include "qlbn/heuristic.hpp"
#include "qlbn/network_io.hpp"
#include "qlbn/numeric.hpp"
#include "qlbn/quantum.hpp"
#include "qlbn/report.hpp"
#include "qlbn/scenario_io.hpp"
#include "qlbn/scenarios.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInference = 2;
constexpr int kExitGolden = 3;

struct DegreePolicy {
  enum class Kind { Auto, Zero, Fixed } kind = Kind::Auto;
  double value = 0.0;
};

DegreePolicy parse_degree_policy(const std::string& text) {
  if (text == "auto") return {};
  if (text == "zero") return {DegreePolicy::Kind::Zero, 0.0};
  if (text.starts_with("fixed:")) {
    const double value = qlbn::parse_decimal(std::string_view(text).substr(6));
    if (!(value >= -1.0 && value <= 1.0)) {
      throw qlbn::Error(qlbn::ErrorKind::InvalidArgument, "fixed degree must lie in [-1, 1]");
    }
    return {DegreePolicy::Kind::Fixed, value};
  }
  throw qlbn::Error(qlbn::ErrorKind::InvalidArgument, "degree must be auto, zero or fixed:<value>");
}

qlbn::Assignment parse_evidence(const std::vector<std::string>& specs) {
  qlbn::Assignment evidence;
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw qlbn::Error(qlbn::ErrorKind::InvalidArgument, "evidence must look like VAR=OUTCOME, got '" + spec + "'");
    }
    const std::string var(qlbn::trim(std::string_view(spec).substr(0, eq)));
    const std::string outcome(qlbn::trim(std::string_view(spec).substr(eq + 1)));
    if (!evidence.emplace(var, outcome).second) {
      throw qlbn::Error(qlbn::ErrorKind::InvalidArgument, "variable '" + var + "' observed twice");
    }
  }
  return evidence;
}

struct Options {
  std::string network;
  std::string scenario;
  std::string bba;
  std::string literature;
  std::string series;
  std::string query;
  std::vector<std::string> evidence;
  std::string mode = "quantum";
  std::string degree = "auto";
  std::string format = "table";
  bool verbose = false;
  bool no_literature = false;
};

int cmd_entropy(const Options& o) {
  const auto bba = qlbn::load_bba(o.bba);
  std::vector<double> singleton_masses;
  // Shannon entropy of the focal masses read as a plain distribution.
  for (const auto& [set, m] : bba.masses()) singleton_masses.push_back(m);
  const double shannon = qlbn::shannon_entropy(singleton_masses);
  std::cout << qlbn::render_entropy(shannon, qlbn::deng_entropy(bba), qlbn::parse_output_format(o.format));
  return kExitOk;
}

int cmd_infer(const Options& o) {
  const auto format = qlbn::parse_output_format(o.format);
  const auto net = qlbn::load_network(o.network);
  const auto evidence = parse_evidence(o.evidence);

  if (o.mode == "classical") {
    std::cout << qlbn::render_distribution(qlbn::infer(net, o.query, evidence), format);
    return kExitOk;
  }
  if (o.mode != "quantum") {
    throw qlbn::Error(qlbn::ErrorKind::InvalidArgument, "mode must be classical or quantum");
  }

  const DegreePolicy policy = parse_degree_policy(o.degree);
  const auto anet = qlbn::amplitudes_from_network(net);
  std::optional<qlbn::DegreeTrace> trace;
  double degree = policy.value;
  if (policy.kind == DegreePolicy::Kind::Auto) {
    // With nothing unobserved there is no interference term to weight.
    if (!qlbn::unobserved_variables(net, o.query, evidence).empty()) {
      trace = qlbn::trace_degree(anet, o.query, evidence);
      degree = trace->degree.value;
    }
  }
  const auto result = qlbn::quantum_infer(anet, o.query, evidence, qlbn::constant_degree(degree));
  std::cout << qlbn::render_quantum(result, trace ? &*trace : nullptr, format, o.verbose);
  return kExitOk;
}

int cmd_predict(const Options& o) {
  const auto scenarios = qlbn::load_scenarios(o.scenario);
  const auto report = qlbn::run_comparison(scenarios);
  std::cout << qlbn::render_report(report, qlbn::parse_output_format(o.format));
  return kExitOk;
}

int cmd_compare(const Options& o) {
  const auto scenarios = o.scenario.empty() ? qlbn::builtin_scenarios() : qlbn::load_scenarios(o.scenario);
  std::vector<qlbn::LiteratureRow> literature;
  if (!o.no_literature) {
    literature = o.literature.empty() ? qlbn::builtin_literature() : qlbn::load_literature(o.literature);
  }
  const auto report = qlbn::run_comparison(scenarios, literature);
  std::cout << qlbn::render_report(report, qlbn::parse_output_format(o.format));
  return kExitOk;
}

int cmd_reproduce(const Options& o) {
  const auto format = qlbn::parse_output_format(o.format);
  const auto r = qlbn::run_reproduction();
  std::cout << qlbn::render_reproduction(r, format);
  if (!o.series.empty()) {
    std::ofstream out(o.series, std::ios::binary);
    if (!out) throw qlbn::Error(qlbn::ErrorKind::InvalidArgument, "cannot write " + o.series);
    out << qlbn::reproduction_series_csv(r);
  }
  if (!r.passed()) {
    std::cerr << "GoldenMismatch:";
    for (const auto& c : r.failures()) std::cerr << " [" << c.name << "]";
    std::cerr << "\n";
    return kExitGolden;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-like Bayesian network inference with belief-entropy interference"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
  };

  auto* entropy = app.add_subcommand("entropy", "Shannon and Deng entropy of a belief assignment");
  entropy->add_option("--bba", o.bba, "Belief assignment file")->required();
  add_format(entropy);

  auto* infer = app.add_subcommand("infer", "Classical or quantum-like inference on a network file");
  infer->add_option("--network", o.network, "Network JSON file")->required();
  infer->add_option("--query", o.query, "Query variable")->required();
  infer->add_option("--evidence", o.evidence, "Observed VAR=OUTCOME (repeatable)");
  infer->add_option("--mode", o.mode, "classical or quantum")
      ->check(CLI::IsMember({"classical", "quantum"}))
      ->capture_default_str();
  infer->add_option("--degree", o.degree, "auto, zero or fixed:<value>")->capture_default_str();
  infer->add_flag("--verbose", o.verbose, "Print the interference trace");
  add_format(infer);

  auto* predict = app.add_subcommand("predict", "Predict the unknown-condition defection rate for scenarios");
  predict->add_option("--scenario", o.scenario, "Scenario JSON file")->required();
  add_format(predict);

  auto* compare = app.add_subcommand("compare", "Scenario report with published model comparisons");
  compare->add_option("--scenario", o.scenario, "Scenario JSON file (default: built-in data)");
  compare->add_option("--literature", o.literature, "Literature JSON file (default: built-in data)");
  compare->add_flag("--no-literature", o.no_literature, "Omit literature columns");
  add_format(compare);

  auto* reproduce = app.add_subcommand("reproduce", "Reproduce the built-in tables and run golden checks");
  reproduce->add_option("--series", o.series, "Also write observed/predicted series CSV to this path");
  add_format(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*entropy) return cmd_entropy(o);
    if (*infer) return cmd_infer(o);
    if (*predict) return cmd_predict(o);
    if (*compare) return cmd_compare(o);
    if (*reproduce) return cmd_reproduce(o);
  } catch (const qlbn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qlbn::is_validation_error(e.kind()) ? kExitValidation : kExitInference;
  }
  return kExitValidation;
}
