#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qel {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  SingularInput,
  DimMismatch,
  BadRank,
  BadArgument,
  InvalidState,
  InconsistentBlocks,
  SingularSigma,
  NotTripartite,
  SingularTerm,
  BadAlpha,
  ZeroOverlap,
  NotUnital,
  NotTracePreserving,
  MarginalMismatch,
  NotPSD,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::BadArgument: return "BadArgument";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InconsistentBlocks: return "InconsistentBlocks";
    case ErrorKind::SingularSigma: return "SingularSigma";
    case ErrorKind::NotTripartite: return "NotTripartite";
    case ErrorKind::SingularTerm: return "SingularTerm";
    case ErrorKind::BadAlpha: return "BadAlpha";
    case ErrorKind::ZeroOverlap: return "ZeroOverlap";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::MarginalMismatch: return "MarginalMismatch";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qel
