#pragma once

#include <stdexcept>
#include <string>

namespace retoric {

// Every failure mode of the library maps to one of these kinds.  The CLI
// translates kinds to exit codes: document/validation problems -> 1,
// violated operation preconditions -> 2, honest "out of scope" -> 3.
enum class ErrorKind {
  InvalidInvolution,
  NotInKernel,
  NotStable,
  NotPrimitive,
  NotAntiInvariant,
  NotInSupport,
  NotAFan,
  NotStronglyConvex,
  NotSmooth,
  NotInvariant,
  NotAffine,
  Twisted,
  NotCoprime,
  PreconditionFailed,
  ConstraintViolated,
  Unsupported,
  ParseError,
  ValidationError,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInvolution: return "InvalidInvolution";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotAntiInvariant: return "NotAntiInvariant";
    case ErrorKind::NotInSupport: return "NotInSupport";
    case ErrorKind::NotAFan: return "NotAFan";
    case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotAffine: return "NotAffine";
    case ErrorKind::Twisted: return "Twisted";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(std::move(detail)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace retoric
