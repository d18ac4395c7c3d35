#include "markov/error.hpp"

namespace markov {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Config: return "Config";
    case ErrorKind::NonExpanding: return "NonExpanding";
    case ErrorKind::NonMarkovImage: return "NonMarkovImage";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::GenerationTooLarge: return "GenerationTooLarge";
    case ErrorKind::InadmissibleWord: return "InadmissibleWord";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::DenominatorOverflow: return "DenominatorOverflow";
    case ErrorKind::HorizonOverflow: return "HorizonOverflow";
    case ErrorKind::DegenerateFit: return "DegenerateFit";
    case ErrorKind::ParameterOrder: return "ParameterOrder";
  }
  return "Unknown";
}

bool is_numerical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConvergenceFailure:
    case ErrorKind::BracketFailure:
    case ErrorKind::DenominatorOverflow:
    case ErrorKind::HorizonOverflow:
    case ErrorKind::DegenerateFit:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace markov
