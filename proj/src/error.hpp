#pragma once

#include <stdexcept>
#include <string>

namespace locus {

// Status codes shared with the C API and reused verbatim as CLI exit codes.
enum class Status : int {
  ok = 0,
  verify_failed = 1,
  parse_error = 2,
  ambiguous_selector = 3,
  cap_exceeded = 4,
  not_closed = 5,
  invalid_argument = 6,
};

class Error : public std::runtime_error {
public:
  Error(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}

  Status status() const { return status_; }

private:
  Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& what) {
  throw Error(status, what);
}

}  // namespace locus
