#ifndef LINEQUIV_ERROR_HPP
#define LINEQUIV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace linequiv {

// Error taxonomy shared by the whole library.  The CLI maps kinds onto
// exit codes: input errors -> 2, cap overruns -> 3, broken internal
// invariants -> 4.
enum class ErrorKind {
  Parse,
  Spec,
  Presentation,
  Schema,
  NotNormal,
  NotSubgroup,
  InvalidFamily,
  NotFrobenius,
  NotPrimePower,
  IsCyclic,
  SameCharacteristic,
  NotInjective,
  NotSurjective,
  ObstructionFails,
  NotFaithful,
  KernelMismatch,
  DegreeMismatch,
  CapExceeded,
  InternalInvariant,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  int exit_code() const {
    switch (kind_) {
      case ErrorKind::CapExceeded:
        return 3;
      case ErrorKind::InternalInvariant:
        return 4;
      default:
        return 2;
    }
  }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Spec: return "SpecError";
    case ErrorKind::Presentation: return "PresentationError";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::NotFrobenius: return "NotFrobenius";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::IsCyclic: return "IsCyclic";
    case ErrorKind::SameCharacteristic: return "SameCharacteristic";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::ObstructionFails: return "ObstructionFails";
    case ErrorKind::NotFaithful: return "NotFaithful";
    case ErrorKind::KernelMismatch: return "KernelMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Error";
}

}  // namespace linequiv

#endif
