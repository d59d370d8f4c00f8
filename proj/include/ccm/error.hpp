#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccm {

enum class ErrorKind {
  kParse,
  kPrecondition,
  kNotIdempotent,
  kNotInjective,
  kNotHomomorphism,
  kNotClosed,
  kSignatureMismatch,
  kNotCancellative,
  kNotAbelianGroup,
  kInvalidCombination,
  kDomain,
  kUnknownFamily,
  kTheoremViolation,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes causes so
/// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ccm
