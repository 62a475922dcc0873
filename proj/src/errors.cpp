#include "repnorm/errors.hpp"

namespace repnorm {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Pole: return "PoleError";
    case ErrorKind::Convergence: return "ConvergenceError";
    case ErrorKind::Precondition: return "PreconditionError";
    case ErrorKind::Normalization: return "NormalizationError";
    case ErrorKind::Scan: return "ScanError";
    case ErrorKind::Fit: return "FitError";
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

}  // namespace repnorm
