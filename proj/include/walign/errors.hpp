#ifndef WALIGN_ERRORS_HPP
#define WALIGN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace walign {

// Bad textual input (CLI exit code 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violation on otherwise well-formed input (CLI exit code 1).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant; always a bug (CLI exit code 3).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

}  // namespace walign

#endif
