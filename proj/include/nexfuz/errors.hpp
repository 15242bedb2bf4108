#ifndef NEXFUZ_ERRORS_HPP
#define NEXFUZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nexfuz {

/// Malformed textual input (rationals, intervals, formulas, files).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size cap was hit; the query is undecided, not unsatisfiable.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A construction produced something its own invariants rule out.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nexfuz

#endif  // NEXFUZ_ERRORS_HPP
