#pragma once

// Quantum-like Bayesian networks. CPT probabilities become real amplitudes
// psi = sqrt(p); the phase content of the model is carried entirely by an
// interference degree that stands in for cos(theta_i - theta_j).

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qlbn/network.hpp"

namespace qlbn {

class AmplitudeNetwork {
 public:
  const Network& topology() const noexcept { return topology_; }

  /// psi(variable = state[variable] | parents as in state).
  double amplitude(std::size_t variable, std::span<const std::size_t> state) const;
  /// Amplitude rows of `variable`, laid out like Network::cpt.
  const std::vector<std::vector<double>>& amplitudes(std::size_t variable) const { return psi_.at(variable); }

  /// |prod psi| over every variable for a full state.
  double amplitude_product(std::span<const std::size_t> state) const;

 private:
  friend AmplitudeNetwork amplitudes_from_network(const Network& net);
  explicit AmplitudeNetwork(Network topology) : topology_(std::move(topology)) {}

  Network topology_;
  std::vector<std::vector<std::vector<double>>> psi_;
};

/// Throws NonBinaryVariable unless every variable has exactly two outcomes.
AmplitudeNetwork amplitudes_from_network(const Network& net);

/// Born rule: |prod psi|^2 for a full assignment. Throws IncompleteAssignment.
double quantum_full_joint(const AmplitudeNetwork& anet, const Assignment& full);

/// Scalar in [-1, 1] replacing cos(theta_i - theta_j). Out-of-range inputs
/// are clamped and flagged; NaN throws InvalidArgument.
class InterferenceDegree {
 public:
  explicit InterferenceDegree(double value);

  double value() const noexcept { return value_; }
  double raw() const noexcept { return raw_; }
  bool clamped() const noexcept { return value_ != raw_; }

 private:
  double value_;
  double raw_;
};

/// Supplies the degree for one query outcome.
using DegreeSource = std::function<InterferenceDegree(const std::string& outcome)>;

DegreeSource constant_degree(double value);

/// 2 * degree * sum_{i<j} m_i m_j.
double interference_sum(std::span<const double> magnitudes, InterferenceDegree degree);

struct OutcomeTerms {
  std::string outcome;
  /// |prod psi| for each completion of the unobserved variables.
  std::vector<double> magnitudes;
  double degree = 0.0;
  double classical_part = 0.0;
  double interference_part = 0.0;
  /// classical_part + interference_part, clamped at zero.
  double unnormalized = 0.0;
  double probability = 0.0;
  bool clamped = false;
};

struct QuantumInferenceResult {
  std::string query;
  std::vector<OutcomeTerms> outcomes;
  /// Reciprocal of the summed unnormalized masses.
  double normalizer = 0.0;

  bool any_clamped() const;
  /// Throws UnknownOutcome.
  double probability(const std::string& outcome) const;
  DiscreteDistribution distribution() const;
};

/// Per query outcome, the amplitude-product magnitudes over every completion
/// of the unobserved variables (first unobserved variable slowest). Throws
/// QueryInEvidence, UnknownVariable, UnknownOutcome.
std::vector<std::vector<double>> outcome_magnitudes(const AmplitudeNetwork& anet, const std::string& query,
                                                    const Assignment& evidence);

/// Quantum marginalization with pairwise interference, normalized post hoc.
/// A negative outcome mass is clamped to zero and flagged. Throws
/// InconsistentEvidence when the evidence itself has probability zero and
/// NegativeUnnormalizedMass when interference leaves no mass at all.
QuantumInferenceResult quantum_infer(const AmplitudeNetwork& anet, const std::string& query,
                                     const Assignment& evidence, const DegreeSource& degree_source);

}  // namespace qlbn
