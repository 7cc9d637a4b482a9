#ifndef ASPH_ERROR_HPP_
#define ASPH_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asph {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Words from different alphabets were combined, or a letter is not in the
  // alphabet.
  class AlphabetError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": "
                + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A Peiffer move that cannot be applied to the sequence it was given.
  class IllegalMoveError : public Error {
   public:
    using Error::Error;
  };

  class NotReducibleError : public Error {
   public:
    using Error::Error;
  };

  // Raised when a computed value leaves the subgroup it must lie in, or a
  // checked algebraic identity fails where it cannot fail on valid input.
  class InvariantError : public Error {
   public:
    using Error::Error;
  };

  class NonRegularError : public Error {
   public:
    using Error::Error;
  };

}  // namespace asph

#endif  // ASPH_ERROR_HPP_
