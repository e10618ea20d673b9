#pragma once

#include <stdexcept>
#include <string>

namespace listdist {

enum class ErrorCode {
  MalformedLine,
  DuplicateEdge,
  LoopEdge,
  InvalidGraph6,
  TooLarge,
  Disconnected,
  NotConnected,
  NotATree,
  Unsupported,
  NotApplicable,
  ListTooShort,
  ExceptionalGraph,
  ExceptionalTree,
  OverConstrained,
  UncolouredIncidentEdge,
  SchemeStuck,
  ExtensionStuck,
  Infeasible,
  InternalAudit,
  BudgetExceeded,
  NotFoundWithin,
  InvalidInput,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& m) { throw Error(c, m); }

}  // namespace listdist
