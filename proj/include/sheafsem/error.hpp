#ifndef SHEAFSEM_ERROR_HPP
#define SHEAFSEM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sheafsem {

enum class ErrorKind {
  IllFormed,
  Inconsistent,
  TypeMismatch,
  ContextMismatch,
  LengthMismatch,
  NotSurjective,
  VocabNotCovered,
  TooLarge,
  UnknownVariable,
  PartialMap,
  EmptySupport,
  AllZero,
  MissingPattern,
  InconsistentCover,
  DisjointnessViolated,
  Syntax,
  Name,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        message_(message) {}

  ErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace sheafsem

#endif
