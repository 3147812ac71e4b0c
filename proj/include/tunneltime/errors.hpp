#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tunneltime {

/// Failure categories. The CLI prints the name verbatim, so these are part of
/// the external interface.
enum class ErrorKind {
  DomainError,
  NoPeak,
  OverBarrier,
  NoConvergence,
  BracketFailure,
  QuadratureFailure,
  SingularityError,
  EvanescentLead,
  RegimeError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NoPeak: return "NoPeak";
    case ErrorKind::OverBarrier: return "OverBarrier";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::SingularityError: return "SingularityError";
    case ErrorKind::EvanescentLead: return "EvanescentLead";
    case ErrorKind::RegimeError: return "RegimeError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace tunneltime
