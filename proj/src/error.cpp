#include "ccm/error.hpp"

namespace ccm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kNotIdempotent: return "not_idempotent";
    case ErrorKind::kNotInjective: return "not_injective";
    case ErrorKind::kNotHomomorphism: return "not_homomorphism";
    case ErrorKind::kNotClosed: return "not_closed";
    case ErrorKind::kSignatureMismatch: return "signature_mismatch";
    case ErrorKind::kNotCancellative: return "not_cancellative";
    case ErrorKind::kNotAbelianGroup: return "not_abelian_group";
    case ErrorKind::kInvalidCombination: return "invalid_combination";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kUnknownFamily: return "unknown_family";
    case ErrorKind::kTheoremViolation: return "theorem_violation";
  }
  return "unknown";
}

}  // namespace ccm
