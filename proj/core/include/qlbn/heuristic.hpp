#pragma once

// Interference degree computed from the network itself. Each query outcome
// yields a pair of amplitude products (one per state of the single
// unobserved variable); each pair is reduced to a Belief Distance, and the
// distances feed a negated Deng entropy that becomes the Belief Degree.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qlbn/quantum.hpp"

namespace qlbn {

struct OutcomeVectorPair {
  std::string outcome;
  /// Amplitude product with the unobserved variable in its first declared state.
  double alpha = 0.0;
  /// ... and in its second declared state.
  double beta = 0.0;
};

struct BeliefDistance {
  double value = 0.0;
};

struct BeliefDegree {
  /// Clamped into [-1, 1].
  double value = 0.0;
  double raw = 0.0;
  bool clamped() const noexcept { return value != raw; }
};

/// Throws UnsupportedStructure unless exactly one binary variable besides the
/// query is unobserved.
std::vector<OutcomeVectorPair> extract_outcome_vectors(const AmplitudeNetwork& anet, const std::string& query,
                                                       const Assignment& evidence);

/// |a + (a - b) / |a + b - 1||, where `a` is whichever argument lies closer
/// to 0.5 (ties keep the given order). Equal arguments return that value.
/// Throws SingularDenominator when a + b = 1 with a != b and InvalidArgument
/// outside [0, 1].
BeliefDistance belief_distance(double alpha, double beta);

/// sum B log2(B / (2^n - 1)) over nonzero distances, clamped into [-1, 1].
BeliefDegree belief_degree(std::span<const BeliefDistance> distances, int num_unobserved = 1);

struct DegreeTrace {
  std::vector<OutcomeVectorPair> pairs;
  /// Indexed like `pairs`.
  std::vector<BeliefDistance> distances;
  BeliefDegree degree;
};

/// Full chain: outcome vectors, one distance per outcome, one shared degree
/// (with a single unobserved variable, so n = 1).
DegreeTrace trace_degree(const AmplitudeNetwork& anet, const std::string& query, const Assignment& evidence);

BeliefDegree degree_for_query(const AmplitudeNetwork& anet, const std::string& query, const Assignment& evidence);

}  // namespace qlbn
