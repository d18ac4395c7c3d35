#pragma once

#include <stdexcept>
#include <string>

namespace markov {

enum class ErrorKind {
  InvalidInput,
  Config,
  NonExpanding,
  NonMarkovImage,
  NotCovering,
  GenerationTooLarge,
  InadmissibleWord,
  NotPrimitive,
  ConvergenceFailure,
  BracketFailure,
  DenominatorOverflow,
  HorizonOverflow,
  DegenerateFit,
  ParameterOrder,
};

const char* to_string(ErrorKind kind);

// Numerical failures map to CLI exit status 2; everything else is a
// usage/configuration problem (exit status 1).
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace markov
