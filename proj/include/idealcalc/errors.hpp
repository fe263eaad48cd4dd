#pragma once

#include <stdexcept>
#include <string>

namespace idealcalc {

// Exit-code contract shared with the CLI:
//   0 ok, 2 usage/parse, 3 resource guard, 4 precondition, 5 theorem violation.
enum class ErrorCode {
  parse = 2,
  resource = 3,
  precondition = 4,
  violation = 5,
  internal = 70,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(ErrorCode::parse, msg) {}
};

// Raised when a computation exceeds the configured total-degree ceiling.
struct DegreeGuardError : Error {
  explicit DegreeGuardError(const std::string& msg) : Error(ErrorCode::resource, msg) {}
};

// Exact rational arithmetic overflowed 64 bits; prime fields do not throw this.
struct OverflowError : Error {
  explicit OverflowError(const std::string& msg) : Error(ErrorCode::resource, msg) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error(ErrorCode::precondition, msg) {}
};

// Seeded "general position" draws disagreed across seeds; never silently resolved.
struct GenericityError : Error {
  explicit GenericityError(const std::string& msg) : Error(ErrorCode::precondition, msg) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(ErrorCode::internal, msg) {}
};

}  // namespace idealcalc
