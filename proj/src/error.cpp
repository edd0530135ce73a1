#include "umtk/error.hpp"

namespace umtk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::DuplicatePointName: return "DuplicatePointName";
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::NonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorKind::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorKind::NegativeDistance: return "NegativeDistance";
    case ErrorKind::SpectrumSizeMismatch: return "SpectrumSizeMismatch";
    case ErrorKind::TargetNotStartingAtZero: return "TargetNotStartingAtZero";
    case ErrorKind::SpaceTooSmall: return "SpaceTooSmall";
    case ErrorKind::NotUltrametric: return "NotUltrametric";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::InvalidTree: return "InvalidTree";
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InfeasibleConstraints: return "InfeasibleConstraints";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace umtk
