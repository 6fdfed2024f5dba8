#pragma once

#include <stdexcept>
#include <string>

namespace trinity {

enum class ErrorKind {
  Dimension,
  InvalidArgument,
  NotPlanar,
  Disconnected,
  NotBipartite,
  NotSimplex,
  Parse,
  Resource,
  Internal,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Dimension: return "dimension-mismatch";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NotPlanar: return "not-planar";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::NotBipartite: return "not-bipartite";
    case ErrorKind::NotSimplex: return "not-a-simplex";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Resource: return "crossing-cap-exceeded";
    case ErrorKind::Internal: return "internal-consistency";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace trinity
