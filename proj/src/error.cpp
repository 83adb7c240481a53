#include "sheafsem/error.hpp"

namespace sheafsem {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IllFormed: return "ill-formed";
    case ErrorKind::Inconsistent: return "inconsistent";
    case ErrorKind::TypeMismatch: return "type mismatch";
    case ErrorKind::ContextMismatch: return "context mismatch";
    case ErrorKind::LengthMismatch: return "length mismatch";
    case ErrorKind::NotSurjective: return "not jointly surjective";
    case ErrorKind::VocabNotCovered: return "vocabulary not covered";
    case ErrorKind::TooLarge: return "too large";
    case ErrorKind::UnknownVariable: return "unknown variable";
    case ErrorKind::PartialMap: return "partial map";
    case ErrorKind::EmptySupport: return "empty support";
    case ErrorKind::AllZero: return "all weights zero";
    case ErrorKind::MissingPattern: return "missing pattern";
    case ErrorKind::InconsistentCover: return "inconsistent cover";
    case ErrorKind::DisjointnessViolated: return "disjointness violated";
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::Name: return "name error";
  }
  return "error";
}

}  // namespace sheafsem
