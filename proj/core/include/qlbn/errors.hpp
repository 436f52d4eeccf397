#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlbn {

enum class ErrorKind {
  // Input validation.
  ParseError,
  InvalidArgument,
  EmptySetMass,
  MassOutOfRange,
  MassSumMismatch,
  UnknownElement,
  DuplicateFocalSet,
  InvalidBase,
  InvalidDistribution,
  UnknownVariable,
  UnknownOutcome,
  DuplicateVariable,
  CyclicGraph,
  MissingCptRow,
  NonBinaryVariable,
  ZeroObserved,
  MissingConditionals,
  // Inference.
  IncompleteAssignment,
  QueryInEvidence,
  InconsistentEvidence,
  NegativeUnnormalizedMass,
  UnsupportedStructure,
  SingularDenominator,
  // Reproduction.
  GoldenMismatch,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by malformed or invalid input (CLI exit code 1),
/// false for errors raised while running an inference (exit code 2).
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qlbn
