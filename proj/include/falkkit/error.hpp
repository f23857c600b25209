#ifndef FALKKIT_ERROR_HPP
#define FALKKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace falkkit {

/// Malformed graph file. Carries the 1-based line number of the offending line
/// (0 when the problem is not tied to a single line, e.g. a missing edge id).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A computation whose correctness depends on hypotheses H1..H5 was requested
/// on a graph that violates them.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace falkkit

#endif  // FALKKIT_ERROR_HPP
