#include "qlbn/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qlbn/errors.hpp"

namespace qlbn {

std::size_t Network::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorKind::UnknownVariable, "no variable '" + name + "'");
  return it->second;
}

std::size_t Network::outcome_index(std::size_t variable, const std::string& outcome) const {
  const auto& outcomes = variables_.at(variable).outcomes;
  auto it = std::find(outcomes.begin(), outcomes.end(), outcome);
  if (it == outcomes.end()) {
    throw Error(ErrorKind::UnknownOutcome,
                "variable '" + variables_[variable].name + "' has no outcome '" + outcome + "'");
  }
  return static_cast<std::size_t>(it - outcomes.begin());
}

std::span<const double> Network::cpt_row(std::size_t variable, std::span<const std::size_t> state) const {
  std::size_t row = 0;
  for (std::size_t parent : parents_.at(variable)) {
    row = row * variables_[parent].outcomes.size() + state[parent];
  }
  return cpts_[variable][row];
}

double Network::conditional(std::size_t variable, std::span<const std::size_t> state) const {
  return cpt_row(variable, state)[state[variable]];
}

State Network::to_state(const Assignment& full) const {
  State state(variables_.size(), 0);
  std::vector<bool> covered(variables_.size(), false);
  for (const auto& [name, outcome] : full) {
    const std::size_t v = index_of(name);
    state[v] = outcome_index(v, outcome);
    covered[v] = true;
  }
  for (std::size_t v = 0; v < covered.size(); ++v) {
    if (!covered[v]) {
      throw Error(ErrorKind::IncompleteAssignment, "variable '" + variables_[v].name + "' is unassigned");
    }
  }
  return state;
}

PartialState Network::to_partial(const Assignment& partial) const {
  PartialState state(variables_.size());
  for (const auto& [name, outcome] : partial) {
    const std::size_t v = index_of(name);
    state[v] = outcome_index(v, outcome);
  }
  return state;
}

Assignment Network::to_assignment(std::span<const std::size_t> state) const {
  Assignment out;
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    out.emplace(variables_[v].name, variables_[v].outcomes.at(state[v]));
  }
  return out;
}

NetworkBuilder& NetworkBuilder::add_variable(std::string name, std::vector<std::string> outcomes) {
  variables_.push_back({std::move(name), std::move(outcomes)});
  return *this;
}

NetworkBuilder& NetworkBuilder::add_edge(const std::string& parent, const std::string& child) {
  edges_.emplace_back(parent, child);
  return *this;
}

NetworkBuilder& NetworkBuilder::set_cpt_row(const std::string& variable, const Assignment& given,
                                            const std::map<std::string, double>& dist) {
  rows_.push_back({variable, given, dist});
  return *this;
}

NetworkBuilder& NetworkBuilder::set_prior(const std::string& variable,
                                          const std::map<std::string, double>& dist) {
  return set_cpt_row(variable, {}, dist);
}

Network NetworkBuilder::build() const {
  Network net;
  for (const auto& var : variables_) {
    if (var.name.empty()) throw Error(ErrorKind::InvalidArgument, "variable names must be nonempty");
    if (var.outcomes.size() < 2) {
      throw Error(ErrorKind::InvalidArgument, "variable '" + var.name + "' needs at least two outcomes");
    }
    std::set<std::string> unique(var.outcomes.begin(), var.outcomes.end());
    if (unique.size() != var.outcomes.size() || unique.contains("")) {
      throw Error(ErrorKind::InvalidArgument, "variable '" + var.name + "' has empty or repeated outcomes");
    }
    if (!net.index_.emplace(var.name, net.variables_.size()).second) {
      throw Error(ErrorKind::DuplicateVariable, "variable '" + var.name + "' declared twice");
    }
    net.variables_.push_back(var);
  }
  const std::size_t n = net.variables_.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "network has no variables");

  net.parents_.assign(n, {});
  for (const auto& [parent, child] : edges_) {
    const std::size_t p = net.index_of(parent);
    const std::size_t c = net.index_of(child);
    if (p == c) throw Error(ErrorKind::CyclicGraph, "self loop on '" + parent + "'");
    auto& ps = net.parents_[c];
    if (std::find(ps.begin(), ps.end(), p) != ps.end()) {
      throw Error(ErrorKind::InvalidArgument, "edge " + parent + " -> " + child + " repeated");
    }
    ps.push_back(p);
  }

  // Kahn's algorithm; ties resolved by declaration order.
  std::vector<std::size_t> pending(n);
  for (std::size_t v = 0; v < n; ++v) pending[v] = net.parents_[v].size();
  std::vector<bool> placed(n, false);
  while (net.topo_.size() < n) {
    bool progressed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v] || pending[v] != 0) continue;
      placed[v] = true;
      net.topo_.push_back(v);
      for (std::size_t c = 0; c < n; ++c) {
        const auto& ps = net.parents_[c];
        if (std::find(ps.begin(), ps.end(), v) != ps.end()) --pending[c];
      }
      progressed = true;
      break;
    }
    if (!progressed) throw Error(ErrorKind::CyclicGraph, "parent graph contains a cycle");
  }

  net.cpts_.resize(n);
  std::vector<std::vector<bool>> filled(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t rows = 1;
    for (std::size_t p : net.parents_[v]) rows *= net.variables_[p].outcomes.size();
    net.cpts_[v].assign(rows, std::vector<double>(net.variables_[v].outcomes.size(), 0.0));
    filled[v].assign(rows, false);
  }

  for (const auto& row : rows_) {
    const std::size_t v = net.index_of(row.variable);
    const auto& ps = net.parents_[v];
    if (row.given.size() != ps.size()) {
      throw Error(ErrorKind::InvalidArgument,
                  "CPT row of '" + row.variable + "' must name exactly its " + std::to_string(ps.size()) +
                      " parent(s)");
    }
    std::size_t index = 0;
    for (std::size_t p : ps) {
      auto it = row.given.find(net.variables_[p].name);
      if (it == row.given.end()) {
        throw Error(ErrorKind::InvalidArgument,
                    "CPT row of '" + row.variable + "' lacks parent '" + net.variables_[p].name + "'");
      }
      index = index * net.variables_[p].outcomes.size() + net.outcome_index(p, it->second);
    }
    if (filled[v][index]) {
      throw Error(ErrorKind::InvalidArgument, "CPT row of '" + row.variable + "' given twice");
    }
    auto& target = net.cpts_[v][index];
    double total = 0.0;
    for (const auto& [outcome, p] : row.dist) {
      if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw Error(ErrorKind::InvalidDistribution,
                    "Pr(" + row.variable + "=" + outcome + ") = " + std::to_string(p) + " outside [0,1]");
      }
      target[net.outcome_index(v, outcome)] = p;
      total += p;
    }
    if (std::abs(total - 1.0) > kProbabilitySumTolerance) {
      throw Error(ErrorKind::InvalidDistribution,
                  "CPT row of '" + row.variable + "' sums to " + std::to_string(total));
    }
    filled[v][index] = true;
  }

  for (std::size_t v = 0; v < n; ++v) {
    for (bool f : filled[v]) {
      if (!f) throw Error(ErrorKind::MissingCptRow, "CPT of '" + net.variables_[v].name + "' is incomplete");
    }
  }
  return net;
}

void for_each_completion(const Network& net, const PartialState& fixed,
                         const std::function<void(const State&)>& visit) {
  const std::size_t n = net.size();
  State state(n, 0);
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < n; ++v) {
    if (fixed[v]) {
      state[v] = *fixed[v];
    } else {
      free.push_back(v);
    }
  }
  while (true) {
    visit(state);
    // Odometer increment, last free variable fastest.
    std::size_t k = free.size();
    while (k > 0) {
      const std::size_t v = free[k - 1];
      if (++state[v] < net.variable(v).outcomes.size()) break;
      state[v] = 0;
      --k;
    }
    if (k == 0) return;
  }
}

double full_joint(const Network& net, std::span<const std::size_t> state) {
  double p = 1.0;
  for (std::size_t v = 0; v < net.size(); ++v) p *= net.conditional(v, state);
  return p;
}

double full_joint(const Network& net, const Assignment& full) {
  const State state = net.to_state(full);
  return full_joint(net, std::span<const std::size_t>(state));
}

DiscreteDistribution infer(const Network& net, const std::string& query, const Assignment& evidence) {
  const std::size_t q = net.index_of(query);
  if (evidence.contains(query)) {
    throw Error(ErrorKind::QueryInEvidence, "'" + query + "' is both queried and observed");
  }
  PartialState fixed = net.to_partial(evidence);
  const auto& outcomes = net.variable(q).outcomes;
  std::vector<double> mass(outcomes.size(), 0.0);
  for (std::size_t x = 0; x < outcomes.size(); ++x) {
    fixed[q] = x;
    for_each_completion(net, fixed, [&](const State& s) { mass[x] += full_joint(net, std::span<const std::size_t>(s)); });
  }
  double total = 0.0;
  for (double m : mass) total += m;
  if (!(total > 0.0)) {
    throw Error(ErrorKind::InconsistentEvidence, "evidence has probability zero");
  }
  for (double& m : mass) m /= total;
  return DiscreteDistribution(outcomes, std::move(mass));
}

double event_probability(const Network& net, const std::function<bool(const Assignment&)>& event) {
  double total = 0.0;
  for_each_completion(net, PartialState(net.size()), [&](const State& s) {
    if (event(net.to_assignment(s))) total += full_joint(net, std::span<const std::size_t>(s));
  });
  return total;
}

std::vector<std::size_t> unobserved_variables(const Network& net, const std::string& query,
                                              const Assignment& evidence) {
  const std::size_t q = net.index_of(query);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < net.size(); ++v) {
    if (v != q && !evidence.contains(net.variable(v).name)) out.push_back(v);
  }
  return out;
}

}  // namespace qlbn
