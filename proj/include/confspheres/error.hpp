#pragma once

#include <stdexcept>
#include <string>

namespace confspheres {

enum class ErrorKind {
    SingularPoint,
    DimensionMismatch,
    DimensionTooSmall,
    OutOfDomain,
    NonPositiveValue,
    IndexOutOfRange,
    NoConvergence,
    LatticeMismatch,
    FitFailure,
    MonotonicityNotFound,
    ConfigError,
    ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace confspheres
