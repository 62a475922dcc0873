#pragma once

#include <stdexcept>
#include <string>

namespace repnorm {

enum class ErrorKind {
  Domain = 1,
  Pole,
  Convergence,
  Precondition,
  Normalization,
  Scan,
  Fit,
  Config,
  Io,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define REPNORM_DEFINE_ERROR(Name, Kind)                         \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(Kind, what) {} \
  };

REPNORM_DEFINE_ERROR(DomainError, ErrorKind::Domain)
REPNORM_DEFINE_ERROR(PoleError, ErrorKind::Pole)
REPNORM_DEFINE_ERROR(ConvergenceError, ErrorKind::Convergence)
REPNORM_DEFINE_ERROR(PreconditionError, ErrorKind::Precondition)
REPNORM_DEFINE_ERROR(NormalizationError, ErrorKind::Normalization)
REPNORM_DEFINE_ERROR(ScanError, ErrorKind::Scan)
REPNORM_DEFINE_ERROR(FitError, ErrorKind::Fit)
REPNORM_DEFINE_ERROR(ConfigError, ErrorKind::Config)
REPNORM_DEFINE_ERROR(IoError, ErrorKind::Io)

#undef REPNORM_DEFINE_ERROR

}  // namespace repnorm
