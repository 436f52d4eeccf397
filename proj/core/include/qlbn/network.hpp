#pragma once

// Discrete Bayesian networks with exact inference by enumeration.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlbn/belief.hpp"

namespace qlbn {

struct Variable {
  std::string name;
  std::vector<std::string> outcomes;
};

/// Variable name -> outcome label. Full when it names every variable,
/// partial (evidence) otherwise.
using Assignment = std::map<std::string, std::string>;

/// Outcome index per variable, in declaration order.
using State = std::vector<std::size_t>;

/// Outcome index per variable, unset where the variable is free.
using PartialState = std::vector<std::optional<std::size_t>>;

class Network {
 public:
  const std::vector<Variable>& variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return variables_.size(); }
  const Variable& variable(std::size_t index) const { return variables_.at(index); }

  /// Throws UnknownVariable.
  std::size_t index_of(const std::string& name) const;
  /// Throws UnknownOutcome.
  std::size_t outcome_index(std::size_t variable, const std::string& outcome) const;

  /// Parents of `variable` in declared order.
  const std::vector<std::size_t>& parents(std::size_t variable) const { return parents_.at(variable); }
  /// Variables ordered so that every parent precedes its children.
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

  /// The CPT row of `variable` selected by the parent outcomes in `state`.
  std::span<const double> cpt_row(std::size_t variable, std::span<const std::size_t> state) const;
  /// All CPT rows of `variable`; row r encodes parent outcomes in mixed radix
  /// with the first declared parent most significant.
  const std::vector<std::vector<double>>& cpt(std::size_t variable) const { return cpts_.at(variable); }

  /// Pr(variable = state[variable] | parents as in state).
  double conditional(std::size_t variable, std::span<const std::size_t> state) const;

  /// Throws IncompleteAssignment, UnknownVariable or UnknownOutcome.
  State to_state(const Assignment& full) const;
  /// Throws UnknownVariable or UnknownOutcome.
  PartialState to_partial(const Assignment& partial) const;
  Assignment to_assignment(std::span<const std::size_t> state) const;

 private:
  friend class NetworkBuilder;
  Network() = default;

  std::vector<Variable> variables_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::vector<std::vector<double>>> cpts_;
  std::vector<std::size_t> topo_;
};

/// Collects variables, edges and CPT rows, then validates them as a whole.
class NetworkBuilder {
 public:
  NetworkBuilder& add_variable(std::string name, std::vector<std::string> outcomes);
  /// Edge order fixes the parent order used for CPT lookup.
  NetworkBuilder& add_edge(const std::string& parent, const std::string& child);
  /// `given` names one outcome per parent; `dist` maps outcomes to
  /// probabilities (unlisted outcomes are zero).
  NetworkBuilder& set_cpt_row(const std::string& variable, const Assignment& given,
                              const std::map<std::string, double>& dist);
  /// Convenience for a parent-free variable.
  NetworkBuilder& set_prior(const std::string& variable, const std::map<std::string, double>& dist);

  /// Throws DuplicateVariable, UnknownVariable, UnknownOutcome, CyclicGraph,
  /// MissingCptRow or InvalidDistribution.
  Network build() const;

 private:
  struct Row {
    std::string variable;
    Assignment given;
    std::map<std::string, double> dist;
  };
  std::vector<Variable> variables_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::vector<Row> rows_;
};

/// Calls `visit` once for every full state that agrees with `fixed`. The
/// first free variable varies slowest.
void for_each_completion(const Network& net, const PartialState& fixed,
                         const std::function<void(const State&)>& visit);

/// Product of the CPT entries selected by a full assignment.
double full_joint(const Network& net, const Assignment& full);
double full_joint(const Network& net, std::span<const std::size_t> state);

/// Pr(query | evidence) by enumeration over unobserved variables, normalized.
/// Throws QueryInEvidence, UnknownVariable, UnknownOutcome, InconsistentEvidence.
DiscreteDistribution infer(const Network& net, const std::string& query, const Assignment& evidence);

/// Sum of full_joint over every full assignment satisfying `event`.
double event_probability(const Network& net, const std::function<bool(const Assignment&)>& event);

/// Variables that are neither the query nor observed, in declaration order.
std::vector<std::size_t> unobserved_variables(const Network& net, const std::string& query,
                                              const Assignment& evidence);

}  // namespace qlbn
