#pragma once

#include <stdexcept>
#include <string>

namespace artin {

enum class ErrorCode {
  Parse,
  VariableMismatch,
  NotZeroDimensional,
  TrivialAlgebra,
  NotLocalOverQ,
  NotGraded,
  PrincipalAlgebra,
  NotGorenstein,
  RelationViolated,
  DependentInput,
  WitnessInsufficient,
  NotDegreeOne,
  IncompatibleAlgebras,
  InvalidArgument,
  BudgetExhausted,
};

const char *to_string(ErrorCode code);

/// Every failure the library reports carries one of the codes above; the
/// C API translates them one-to-one into status values.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace artin
