#pragma once

// Rendering of inference results and scenario reports, and the built-in
// reproduction run with its golden checks. Tables print 5 decimals; CSV and
// JSON carry 17 significant digits.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlbn/belief.hpp"
#include "qlbn/heuristic.hpp"
#include "qlbn/quantum.hpp"
#include "qlbn/scenarios.hpp"

namespace qlbn {

enum class OutputFormat { Table, Csv, Json };

/// Throws InvalidArgument for anything but table, csv or json.
OutputFormat parse_output_format(std::string_view text);

std::string csv_escape(std::string_view field);
/// Splits one CSV line, honoring double-quoted fields.
std::vector<std::string> csv_split(std::string_view line);

std::string render_entropy(double shannon, double deng, OutputFormat format);

std::string render_distribution(const DiscreteDistribution& dist, OutputFormat format);

/// Quantum result; when `trace` is given and `verbose` is set the table form
/// also lists outcome vectors, distances and the raw/clamped degree.
std::string render_quantum(const QuantumInferenceResult& result, const DegreeTrace* trace, OutputFormat format,
                           bool verbose);

std::string quantum_result_to_json(const QuantumInferenceResult& result, const DegreeTrace* trace = nullptr);

/// One row per record plus an average row. Literature columns appear only
/// when some record carries them.
std::string render_report(const ComparisonReport& report, OutputFormat format);

struct GoldenCheck {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;

  bool passed() const;
};

struct Reproduction {
  ComparisonReport table;         ///< five built-in scenarios
  ComparisonReport comparison;    ///< reproducible rows of the model comparison
  std::vector<Scenario> comparison_scenarios;
  std::vector<LiteratureRow> literature;
  std::vector<GoldenCheck> checks;

  bool passed() const;
  std::vector<GoldenCheck> failures() const;
};

Reproduction run_reproduction();

std::string render_reproduction(const Reproduction& r, OutputFormat format);

/// Observed vs predicted series, one line per (scenario, model).
std::string reproduction_series_csv(const Reproduction& r);

}  // namespace qlbn
