#include "qlbn/belief.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qlbn/errors.hpp"

namespace qlbn {

namespace {

std::string join(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

}  // namespace

Frame::Frame(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "frame must contain at least one element");
  }
  std::set<std::string> seen;
  for (const auto& label : elements_) {
    if (label.empty()) {
      throw Error(ErrorKind::InvalidArgument, "frame element labels must be nonempty");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate frame element '" + label + "'");
    }
  }
}

bool Frame::contains(const std::string& label) const {
  return std::find(elements_.begin(), elements_.end(), label) != elements_.end();
}

FocalSet canonical_focal_set(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

double BeliefAssignment::mass(const std::vector<std::string>& subset) const {
  auto it = masses_.find(canonical_focal_set(subset));
  return it == masses_.end() ? 0.0 : it->second;
}

bool BeliefAssignment::singletons_only() const {
  return std::all_of(masses_.begin(), masses_.end(),
                     [](const auto& entry) { return entry.first.size() == 1; });
}

BeliefAssignment validate_bba(const RawMasses& raw, const Frame& frame) {
  std::map<FocalSet, double> masses;
  std::set<FocalSet> seen;
  double total = 0.0;
  for (const auto& [labels, value] : raw) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
      throw Error(ErrorKind::MassOutOfRange,
                  "mass " + std::to_string(value) + " on " + join(labels) + " is outside [0,1]");
    }
    FocalSet set = canonical_focal_set(labels);
    if (set.empty()) {
      if (value != 0.0) {
        throw Error(ErrorKind::EmptySetMass, "the empty set must carry zero mass");
      }
      continue;
    }
    for (const auto& label : set) {
      if (!frame.contains(label)) {
        throw Error(ErrorKind::UnknownElement, "'" + label + "' is not in the frame");
      }
    }
    if (!seen.insert(set).second) {
      throw Error(ErrorKind::DuplicateFocalSet, join(set) + " assigned more than once");
    }
    total += value;
    if (value > 0.0) masses.emplace(std::move(set), value);
  }
  if (std::abs(total - 1.0) > kMassSumTolerance) {
    throw Error(ErrorKind::MassSumMismatch, "masses sum to " + std::to_string(total));
  }
  return BeliefAssignment(frame, std::move(masses));
}

DiscreteDistribution::DiscreteDistribution(std::vector<std::string> labels,
                                           std::vector<double> probabilities)
    : labels_(std::move(labels)), probabilities_(std::move(probabilities)) {
  if (labels_.empty() || labels_.size() != probabilities_.size()) {
    throw Error(ErrorKind::InvalidDistribution, "labels and probabilities must be nonempty and aligned");
  }
  double total = 0.0;
  for (double p : probabilities_) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw Error(ErrorKind::InvalidDistribution, "probability " + std::to_string(p) + " outside [0,1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kProbabilitySumTolerance) {
    throw Error(ErrorKind::InvalidDistribution, "probabilities sum to " + std::to_string(total));
  }
}

double DiscreteDistribution::at(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::UnknownOutcome, "no outcome '" + label + "'");
  return probabilities_[static_cast<std::size_t>(it - labels_.begin())];
}

double shannon_entropy(std::span<const double> probabilities, double log_base) {
  if (!(log_base > 0.0) || log_base == 1.0 || !std::isfinite(log_base)) {
    throw Error(ErrorKind::InvalidBase, "logarithm base must be positive and not 1");
  }
  const double scale = std::log(log_base);
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) h -= p * std::log(p);
  }
  // -0.0 for degenerate distributions
  return h / scale + 0.0;
}

double shannon_entropy(const DiscreteDistribution& dist, double log_base) {
  return shannon_entropy(std::span<const double>(dist.probabilities()), log_base);
}

double deng_entropy(const BeliefAssignment& bba) {
  double e = 0.0;
  for (const auto& [set, m] : bba.masses()) {
    if (m <= 0.0) continue;
    const double states = std::exp2(static_cast<double>(set.size())) - 1.0;
    e -= m * std::log2(m / states);
  }
  return e + 0.0;
}

}  // namespace qlbn
