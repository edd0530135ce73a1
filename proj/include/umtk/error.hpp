#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace umtk {

enum class ErrorKind {
  Parse,
  EmptySpace,
  DuplicatePointName,
  NonSymmetric,
  NonZeroDiagonal,
  ZeroOffDiagonal,
  NegativeDistance,
  SpectrumSizeMismatch,
  TargetNotStartingAtZero,
  SpaceTooSmall,
  NotUltrametric,
  UnknownPoint,
  InvalidTree,
  NotABijection,
  TooLarge,
  InfeasibleConstraints,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace umtk
