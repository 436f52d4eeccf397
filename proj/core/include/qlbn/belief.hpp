#pragma once

// Dempster-Shafer basic belief assignments with Shannon and Deng entropy.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qlbn {

inline constexpr double kMassSumTolerance = 1e-9;
inline constexpr double kProbabilitySumTolerance = 1e-9;

/// Finite frame of discernment: an ordered set of distinct, nonempty labels.
class Frame {
 public:
  explicit Frame(std::vector<std::string> elements);

  const std::vector<std::string>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const std::string& label) const;

 private:
  std::vector<std::string> elements_;
};

/// A focal set in canonical form: labels sorted lexicographically, no repeats.
using FocalSet = std::vector<std::string>;

FocalSet canonical_focal_set(std::vector<std::string> labels);

/// Mass entries as they arrive from a caller or file, before validation.
using RawMasses = std::vector<std::pair<std::vector<std::string>, double>>;

/// A validated basic belief assignment. Only nonzero masses on nonempty
/// subsets are stored; the empty set implicitly carries zero mass.
class BeliefAssignment {
 public:
  const Frame& frame() const noexcept { return frame_; }
  const std::map<FocalSet, double>& masses() const noexcept { return masses_; }

  /// Mass of `subset` (zero when it is not a focal set).
  double mass(const std::vector<std::string>& subset) const;

  bool singletons_only() const;

 private:
  friend BeliefAssignment validate_bba(const RawMasses& raw, const Frame& frame);
  BeliefAssignment(Frame frame, std::map<FocalSet, double> masses)
      : frame_(std::move(frame)), masses_(std::move(masses)) {}

  Frame frame_;
  std::map<FocalSet, double> masses_;
};

/// Checks m(empty) = 0, masses in [0,1], sum to one within 1e-9 and subsets
/// drawn from `frame`. Throws qlbn::Error on the first violation.
BeliefAssignment validate_bba(const RawMasses& raw, const Frame& frame);

class DiscreteDistribution {
 public:
  /// Throws InvalidDistribution unless sizes match, each value is in [0,1]
  /// and the values sum to 1 within 1e-9.
  DiscreteDistribution(std::vector<std::string> labels, std::vector<double> probabilities);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<double>& probabilities() const noexcept { return probabilities_; }
  std::size_t size() const noexcept { return labels_.size(); }

  /// Probability of `label`; throws UnknownOutcome.
  double at(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> probabilities_;
};

double shannon_entropy(std::span<const double> probabilities, double log_base = 2.0);
double shannon_entropy(const DiscreteDistribution& dist, double log_base = 2.0);

/// Deng (belief) entropy in bits: -sum m(A) log2(m(A) / (2^|A| - 1)).
double deng_entropy(const BeliefAssignment& bba);

}  // namespace qlbn
