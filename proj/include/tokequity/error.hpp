#pragma once

#include <stdexcept>
#include <string>

namespace tokequity {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  kValidation,  // malformed or inconsistent input
  kDataGap,     // a required record or indicator is missing
  kTransport,   // network, HTTP or authentication failure
  kIo,          // filesystem failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error ValidationError(const std::string& message) {
  return Error(ErrorKind::kValidation, message);
}

inline Error DataGapError(const std::string& message) {
  return Error(ErrorKind::kDataGap, message);
}

inline Error IoError(const std::string& message) {
  return Error(ErrorKind::kIo, message);
}

inline Error TransportError(const std::string& message) {
  return Error(ErrorKind::kTransport, message);
}

// 0 ok, 2 validation, 3 data gap, 4 transport. I/O problems are reported as
// validation failures since they almost always mean a bad path in the config.
inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kValidation:
    case ErrorKind::kIo:
      return 2;
    case ErrorKind::kDataGap:
      return 3;
    case ErrorKind::kTransport:
      return 4;
  }
  return 1;
}

}  // namespace tokequity
