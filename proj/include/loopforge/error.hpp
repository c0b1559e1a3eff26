#pragma once

#include <stdexcept>
#include <string>

namespace loopforge {

enum class ErrorKind {
  DegreeMismatch,
  NotSquare,
  NotLatin,
  NoIdentity,
  OutOfRange,
  NotSubgroup,
  NotSElements,
  NotSLoop,
  SearchCapExceeded,
  OrderTooLarge,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace loopforge
