#include "qlbn/errors.hpp"

namespace qlbn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptySetMass: return "EmptySetMass";
    case ErrorKind::MassOutOfRange: return "MassOutOfRange";
    case ErrorKind::MassSumMismatch: return "MassSumMismatch";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DuplicateFocalSet: return "DuplicateFocalSet";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::UnknownOutcome: return "UnknownOutcome";
    case ErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ErrorKind::CyclicGraph: return "CyclicGraph";
    case ErrorKind::MissingCptRow: return "MissingCptRow";
    case ErrorKind::NonBinaryVariable: return "NonBinaryVariable";
    case ErrorKind::ZeroObserved: return "ZeroObserved";
    case ErrorKind::MissingConditionals: return "MissingConditionals";
    case ErrorKind::IncompleteAssignment: return "IncompleteAssignment";
    case ErrorKind::QueryInEvidence: return "QueryInEvidence";
    case ErrorKind::InconsistentEvidence: return "InconsistentEvidence";
    case ErrorKind::NegativeUnnormalizedMass: return "NegativeUnnormalizedMass";
    case ErrorKind::UnsupportedStructure: return "UnsupportedStructure";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
    case ErrorKind::GoldenMismatch: return "GoldenMismatch";
  }
  return "Unknown";
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IncompleteAssignment:
    case ErrorKind::QueryInEvidence:
    case ErrorKind::InconsistentEvidence:
    case ErrorKind::NegativeUnnormalizedMass:
    case ErrorKind::UnsupportedStructure:
    case ErrorKind::SingularDenominator:
    case ErrorKind::GoldenMismatch:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace qlbn
