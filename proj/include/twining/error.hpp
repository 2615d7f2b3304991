#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twining {

enum class ErrorKind {
  NotGCM,
  NotSymmetrizable,
  NotFiniteType,
  NotDominant,
  NotReduced,
  SizeMismatch,
  NotDiagramAutomorphism,
  LinkingConditionFailed,
  UnsupportedOrbitShape,
  NotSymmetricWeight,
  NotInWTilde,
  NoDescentFound,
  NotTauStable,
  TooLarge,
  InvalidInput,
  Internal,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotGCM: return "NotGCM";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotDiagramAutomorphism: return "NotDiagramAutomorphism";
    case ErrorKind::LinkingConditionFailed: return "LinkingConditionFailed";
    case ErrorKind::UnsupportedOrbitShape: return "UnsupportedOrbitShape";
    case ErrorKind::NotSymmetricWeight: return "NotSymmetricWeight";
    case ErrorKind::NotInWTilde: return "NotInWTilde";
    case ErrorKind::NoDescentFound: return "NoDescentFound";
    case ErrorKind::NotTauStable: return "NotTauStable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace twining
