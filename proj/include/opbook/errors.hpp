#pragma once

#include <stdexcept>
#include <string>

namespace opbook {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller violated a documented precondition of a construction.
struct PreconditionFailed : Error {
  explicit PreconditionFailed(const std::string& clause)
      : Error("precondition failed: " + clause) {}
};

struct NotForestic : Error {
  explicit NotForestic(const std::string& msg) : Error("not forestic: " + msg) {}
};

struct OddVolume : Error {
  OddVolume() : Error("odd volume: edge deficit undefined") {}
};

struct Unbalanced : Error {
  explicit Unbalanced(const std::string& msg) : Error("unbalanced: " + msg) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& msg) : Error("too large: " + msg) {}
};

// A construction reached a state the underlying argument rules out.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

}  // namespace opbook
