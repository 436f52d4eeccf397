#include "qlbn/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qlbn/errors.hpp"

namespace qlbn {

namespace {

constexpr double kSingularTolerance = 1e-12;

}  // namespace

std::vector<OutcomeVectorPair> extract_outcome_vectors(const AmplitudeNetwork& anet, const std::string& query,
                                                       const Assignment& evidence) {
  const Network& net = anet.topology();
  const auto hidden = unobserved_variables(net, query, evidence);
  if (hidden.size() != 1) {
    throw Error(ErrorKind::UnsupportedStructure,
                "belief heuristic needs exactly one unobserved variable besides '" + query + "', found " +
                    std::to_string(hidden.size()));
  }
  const auto magnitudes = outcome_magnitudes(anet, query, evidence);
  const auto& labels = net.variable(net.index_of(query)).outcomes;

  std::vector<OutcomeVectorPair> pairs;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    // Binary hidden variable -> exactly two completions, in declared order.
    pairs.push_back({labels[x], magnitudes[x].at(0), magnitudes[x].at(1)});
  }
  return pairs;
}

BeliefDistance belief_distance(double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "belief distance inputs must lie in [0,1]");
  }
  if (alpha == beta) return {alpha};
  if (std::abs(alpha - 0.5) > std::abs(beta - 0.5)) std::swap(alpha, beta);
  const double denom = std::abs(alpha + beta - 1.0);
  if (denom < kSingularTolerance) {
    throw Error(ErrorKind::SingularDenominator,
                "alpha + beta = 1 with alpha != beta (" + std::to_string(alpha) + ", " + std::to_string(beta) + ")");
  }
  return {std::abs(alpha + (alpha - beta) / denom)};
}

BeliefDegree belief_degree(std::span<const BeliefDistance> distances, int num_unobserved) {
  if (distances.empty()) throw Error(ErrorKind::InvalidArgument, "belief degree needs at least one distance");
  if (num_unobserved < 1) throw Error(ErrorKind::InvalidArgument, "num_unobserved must be positive");
  const double states = std::exp2(num_unobserved) - 1.0;
  double raw = 0.0;
  for (const auto& d : distances) {
    if (d.value > 0.0) raw += d.value * std::log2(d.value / states);
  }
  return {std::clamp(raw, -1.0, 1.0), raw};
}

DegreeTrace trace_degree(const AmplitudeNetwork& anet, const std::string& query, const Assignment& evidence) {
  DegreeTrace trace;
  trace.pairs = extract_outcome_vectors(anet, query, evidence);
  for (const auto& pair : trace.pairs) trace.distances.push_back(belief_distance(pair.alpha, pair.beta));
  trace.degree = belief_degree(trace.distances, 1);
  return trace;
}

BeliefDegree degree_for_query(const AmplitudeNetwork& anet, const std::string& query, const Assignment& evidence) {
  return trace_degree(anet, query, evidence).degree;
}

}  // namespace qlbn
