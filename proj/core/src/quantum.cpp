#include "qlbn/quantum.hpp"

#include <algorithm>
#include <cmath>

#include "qlbn/errors.hpp"

namespace qlbn {

double AmplitudeNetwork::amplitude(std::size_t variable, std::span<const std::size_t> state) const {
  const Network& net = topology_;
  std::size_t row = 0;
  for (std::size_t parent : net.parents(variable)) {
    row = row * net.variable(parent).outcomes.size() + state[parent];
  }
  return psi_[variable][row][state[variable]];
}

double AmplitudeNetwork::amplitude_product(std::span<const std::size_t> state) const {
  double product = 1.0;
  for (std::size_t v = 0; v < topology_.size(); ++v) product *= amplitude(v, state);
  return product;
}

AmplitudeNetwork amplitudes_from_network(const Network& net) {
  AmplitudeNetwork anet(net);
  anet.psi_.resize(net.size());
  for (std::size_t v = 0; v < net.size(); ++v) {
    if (net.variable(v).outcomes.size() != 2) {
      throw Error(ErrorKind::NonBinaryVariable,
                  "variable '" + net.variable(v).name + "' must have exactly two outcomes");
    }
    for (const auto& row : net.cpt(v)) {
      std::vector<double> psi(row.size());
      std::transform(row.begin(), row.end(), psi.begin(), [](double p) { return std::sqrt(p); });
      anet.psi_[v].push_back(std::move(psi));
    }
  }
  return anet;
}

double quantum_full_joint(const AmplitudeNetwork& anet, const Assignment& full) {
  const State state = anet.topology().to_state(full);
  const double m = anet.amplitude_product(state);
  return m * m;
}

InterferenceDegree::InterferenceDegree(double value) : raw_(value) {
  if (std::isnan(value)) throw Error(ErrorKind::InvalidArgument, "interference degree is NaN");
  value_ = std::clamp(value, -1.0, 1.0);
}

DegreeSource constant_degree(double value) {
  const InterferenceDegree degree(value);
  return [degree](const std::string&) { return degree; };
}

double interference_sum(std::span<const double> magnitudes, InterferenceDegree degree) {
  double pairs = 0.0;
  for (std::size_t i = 0; i + 1 < magnitudes.size(); ++i) {
    for (std::size_t j = i + 1; j < magnitudes.size(); ++j) pairs += magnitudes[i] * magnitudes[j];
  }
  return 2.0 * degree.value() * pairs;
}

bool QuantumInferenceResult::any_clamped() const {
  return std::any_of(outcomes.begin(), outcomes.end(), [](const OutcomeTerms& t) { return t.clamped; });
}

double QuantumInferenceResult::probability(const std::string& outcome) const {
  for (const auto& t : outcomes) {
    if (t.outcome == outcome) return t.probability;
  }
  throw Error(ErrorKind::UnknownOutcome, "no outcome '" + outcome + "' in result for '" + query + "'");
}

DiscreteDistribution QuantumInferenceResult::distribution() const {
  std::vector<std::string> labels;
  std::vector<double> probs;
  for (const auto& t : outcomes) {
    labels.push_back(t.outcome);
    probs.push_back(t.probability);
  }
  return DiscreteDistribution(std::move(labels), std::move(probs));
}

std::vector<std::vector<double>> outcome_magnitudes(const AmplitudeNetwork& anet, const std::string& query,
                                                    const Assignment& evidence) {
  const Network& net = anet.topology();
  const std::size_t q = net.index_of(query);
  if (evidence.contains(query)) {
    throw Error(ErrorKind::QueryInEvidence, "'" + query + "' is both queried and observed");
  }
  PartialState fixed = net.to_partial(evidence);
  std::vector<std::vector<double>> out(net.variable(q).outcomes.size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    fixed[q] = x;
    for_each_completion(net, fixed, [&](const State& s) { out[x].push_back(anet.amplitude_product(s)); });
  }
  return out;
}

QuantumInferenceResult quantum_infer(const AmplitudeNetwork& anet, const std::string& query,
                                     const Assignment& evidence, const DegreeSource& degree_source) {
  const auto magnitudes = outcome_magnitudes(anet, query, evidence);
  const auto& labels = anet.topology().variable(anet.topology().index_of(query)).outcomes;

  QuantumInferenceResult result;
  result.query = query;
  double total = 0.0;
  double classical_total = 0.0;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    OutcomeTerms t;
    t.outcome = labels[x];
    t.magnitudes = magnitudes[x];
    const InterferenceDegree degree = degree_source(labels[x]);
    t.degree = degree.value();
    for (double m : t.magnitudes) t.classical_part += m * m;
    t.interference_part = interference_sum(t.magnitudes, degree);
    classical_total += t.classical_part;
    t.unnormalized = t.classical_part + t.interference_part;
    if (t.unnormalized < 0.0) {
      t.unnormalized = 0.0;
      t.clamped = true;
    }
    total += t.unnormalized;
    result.outcomes.push_back(std::move(t));
  }

  if (!(classical_total > 0.0)) {
    throw Error(ErrorKind::InconsistentEvidence, "evidence has probability zero");
  }
  if (!(total > 0.0)) {
    throw Error(ErrorKind::NegativeUnnormalizedMass,
                "interference cancels every outcome of '" + query + "'");
  }
  result.normalizer = 1.0 / total;
  for (auto& t : result.outcomes) t.probability = t.unnormalized / total;
  return result;
}

}  // namespace qlbn
