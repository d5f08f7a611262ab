#pragma once

#include <stdexcept>
#include <string>

namespace mvalg {

/// Malformed input: bad tables, out-of-range indices, unparsable files.
/// Distinct from an axiom failure, which is reported through a CheckReport.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on a structure that does not satisfy its
/// stated precondition (e.g. fraction field of a ring with zero divisors).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced something ill-defined on this instance, such as
/// cosets that overlap without coinciding.
class StructuralAnomaly : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mvalg
