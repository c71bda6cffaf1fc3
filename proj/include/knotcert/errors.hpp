#pragma once

#include <stdexcept>
#include <string>

namespace knotcert {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, out-of-range parameters, foreign symbols.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold for otherwise valid input.
class MathError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

#define KNOTCERT_ERROR(Name, Base)            \
  class Name : public Base {                  \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Base(std::string(#Name ": ") + what) {} \
  }

// exact-algebra
KNOTCERT_ERROR(NotDivisible, MathError);
KNOTCERT_ERROR(DivisionByZero, MathError);
KNOTCERT_ERROR(InvalidIndex, InputError);
KNOTCERT_ERROR(SizeTooLarge, InputError);
KNOTCERT_ERROR(AllZero, MathError);

// fp-group
KNOTCERT_ERROR(ForeignGenerator, InputError);
KNOTCERT_ERROR(NoDefiningRelator, MathError);
KNOTCERT_ERROR(InvalidGenerator, InputError);

// fox-alexander
KNOTCERT_ERROR(UnmappedGenerator, InputError);
KNOTCERT_ERROR(NotInfiniteCyclicAbelianization, MathError);

// knot-constructions
KNOTCERT_ERROR(InvalidP, InputError);
KNOTCERT_ERROR(BadPair, InputError);
KNOTCERT_ERROR(MismatchError, InvariantViolation);

// torus-word-problem
KNOTCERT_ERROR(BadParams, InputError);

// text formats
KNOTCERT_ERROR(UnknownGenerator, InputError);
KNOTCERT_ERROR(ZeroExponent, InputError);

#undef KNOTCERT_ERROR

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("SyntaxError at " + std::to_string(line) + ":" +
                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace knotcert
