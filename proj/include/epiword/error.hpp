#ifndef EPIWORD_ERROR_HPP
#define EPIWORD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace epiword {

enum class ErrorKind {
  EmptyWord,
  InvalidLetter,
  InvalidAlphabet,
  Parse,
  NonCoprime,
  DegenerateSlope,
  NotBinary,
  AllZero,
  NotAdmissible,
  TrivialTuple,
  NotEpichristoffel,
  RootSelectionFailure,
  DimensionMismatch,
  NotInTree,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace epiword

#endif  // EPIWORD_ERROR_HPP
