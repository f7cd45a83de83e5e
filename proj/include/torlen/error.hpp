#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torlen {

  // Raised for violated preconditions (bad parameters, undeclared symbols,
  // relators of the wrong shape, ...).
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + message),
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

}  // namespace torlen
