#pragma once

#include <stdexcept>
#include <string>

namespace lapmotif {

// Violated operation precondition (bad ids, unbalanced functions, ...).
// The CLI maps these to exit code 1.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input text (edge lists, function files, rationals).
// The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested a block with f(p0) and excess(p0) both odd. No such block exists:
// any integer function with a single excess vertex p0 satisfies
// f(p0)*e(p0) = 2 * sum over edges (q,r) of f(q)*f(r), which is even.
class ParityObstruction : public PreconditionError {
 public:
  ParityObstruction(long long n, long long m);

  long long value() const { return n_; }
  long long target_excess() const { return m_; }

 private:
  long long n_;
  long long m_;
};

}  // namespace lapmotif
