#pragma once

#include <stdexcept>
#include <string>

namespace mono {

  /// Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Malformed input text (.mon, .tgen, .dfa, terms, CLI values).
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line = 0)
        : Error(line == 0 ? what
                          : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  /// A table that is not a monoid (associativity or identity failure).
  class InvalidMonoid : public Error {
   public:
    using Error::Error;
  };

  /// An enumeration exceeded its configured element or state cap.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what, std::size_t reached)
        : Error(what), reached_(reached) {}

    std::size_t reached() const noexcept {
      return reached_;
    }

   private:
    std::size_t reached_;
  };

  /// Precondition violations on otherwise well-formed values.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  /// A replay or shadow run whose stated hypothesis does not hold.
  class HypothesisFailure : public Error {
   public:
    using Error::Error;
  };

}  // namespace mono
