#pragma once

// Two-player prisoner's dilemma scenarios: the second player's defection
// probability when the first player's move is unknown, predicted classically
// and with the belief-degree quantum-like network.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlbn/heuristic.hpp"
#include "qlbn/network.hpp"
#include "qlbn/quantum.hpp"

namespace qlbn {

inline constexpr const char* kFirstPlayer = "P1";
inline constexpr const char* kSecondPlayer = "P2";
inline constexpr const char* kDefect = "Defect";
inline constexpr const char* kCooperate = "Cooperate";

struct Scenario {
  std::string name;
  /// Pr(P2 = Defect | P1 = Defect); absent for observed-only placeholders.
  std::optional<double> p_defect_given_defect;
  /// Pr(P2 = Defect | P1 = Cooperate).
  std::optional<double> p_defect_given_cooperate;
  /// Observed Pr(P2 = Defect) when P1's move is unknown.
  double observed_unknown = 0.0;
  double prior_defect = 0.5;
  /// Free-text metadata (payoff matrix etc.), never used in computation.
  std::optional<std::string> payoff_note;

  bool has_conditionals() const noexcept {
    return p_defect_given_defect.has_value() && p_defect_given_cooperate.has_value();
  }
};

/// Throws InvalidArgument when a probability lies outside [0, 1].
void validate_scenario(const Scenario& s);

/// A competing model's published prediction for one scenario.
struct ModelComparison {
  std::string model;
  double predicted = 0.0;
  double fit_error = 0.0;
};

/// Published comparison figures for one scenario; reporting only.
struct LiteratureRow {
  std::string scenario;
  double observed = 0.0;
  std::vector<ModelComparison> models;
};

struct PredictionRecord {
  std::string scenario;
  double observed = 0.0;
  double classical_prediction = 0.0;
  double quantum_prediction = 0.0;
  BeliefDegree belief_degree;
  double fit_error_classical = 0.0;
  double fit_error_quantum = 0.0;
  std::vector<ModelComparison> literature_comparisons;
  DegreeTrace trace;
  QuantumInferenceResult quantum;
};

struct ComparisonReport {
  std::vector<PredictionRecord> records;
  /// Column name -> mean fit error, columns in report order: "classical",
  /// "quantum", then each literature model in first-seen order.
  std::vector<std::pair<std::string, double>> average_fit_errors;
};

/// P1 -> P2 with P1 outcomes (Cooperate, Defect) and P2 outcomes
/// (Defect, Cooperate). Throws MissingConditionals for placeholders.
Network scenario_to_network(const Scenario& s);

/// |predicted - observed| / observed. Throws ZeroObserved.
double fit_error(double predicted, double observed);

PredictionRecord predict_unknown(const Scenario& s);

/// Evaluates every scenario in input order. Literature rows attach to the
/// scenario with the same name. Throws InvalidArgument on an empty list.
ComparisonReport run_comparison(std::span<const Scenario> scenarios,
                                std::span<const LiteratureRow> literature = {});

// Built-in prisoner's dilemma data.

/// Payoff matrix of the game the built-in data comes from (metadata only).
extern const char* const kPayoffNote;

/// Five rows: four experiments plus their average.
std::vector<Scenario> builtin_scenarios();

/// Scenarios of the five-way model comparison. The three Li and Taplin
/// experiments carry observed values only.
std::vector<Scenario> builtin_comparison_scenarios();

/// Published predictions and fit errors of the two competing models and of
/// the belief-degree model itself.
std::vector<LiteratureRow> builtin_literature();

/// Published average fit errors, by model column name.
std::vector<std::pair<std::string, double>> builtin_literature_averages();

inline constexpr const char* kModelQpdt = "QPDT";
inline constexpr const char* kModelDynamic = "DynamicQLBN";
inline constexpr const char* kModelPublished = "PublishedBeliefDegree";

}  // namespace qlbn
