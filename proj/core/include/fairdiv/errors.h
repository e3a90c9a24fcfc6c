#ifndef FAIRDIV_ERRORS_H_
#define FAIRDIV_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fairdiv {

// Bad instance data: missing table entries, negative values, v(empty) != 0,
// a valuation that violates its declared class, unparsable JSON.
class MalformedInstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (alpha out of range, an
// incomplete allocation where a complete one is required, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search would exceed its configured cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proven bound or invariant failed at run time. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fairdiv

#endif  // FAIRDIV_ERRORS_H_
