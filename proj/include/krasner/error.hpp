#pragma once

#include <stdexcept>
#include <string>

namespace krasner {

/// Error categories surfaced by the library. Verdicts (axiom failures,
/// predicate failures) are reported through report types, not thrown;
/// exceptions are reserved for precondition and input errors.
enum class ErrorCode {
  kParse,             // malformed instance file
  kArity,             // wrong tuple length / inadmissible product length
  kEmptyArgument,     // empty subset where nonempty required
  kMissingIdentity,   // operation requires a scalar identity
  kImproperIdeal,     // predicate requires a proper hyperideal
  kCapExceeded,       // carrier or lattice above configured cap
  kInvalidInput,      // everything else (bad labels, non-ideal subsets, ...)
  kInternal,          // broken invariant inside a construction
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace krasner
