#ifndef KHR_ERROR_HPP_
#define KHR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace khr {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Two operands live on different carriers (or different rings/modules).
  class CarrierMismatch : public Error {
   public:
    using Error::Error;
  };

  // An exhaustive search would exceed its configured size bound. Searches
  // never truncate silently; they refuse instead.
  class BoundExceeded : public Error {
   public:
    using Error::Error;
  };

  // Malformed or axiom-violating input.
  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  // A mechanically checked theorem instance did not hold.
  class TheoremViolation : public Error {
   public:
    TheoremViolation(std::string check, std::string const& what)
        : Error(check + ": " + what), _check(std::move(check)) {}

    std::string const& check() const noexcept {
      return _check;
    }

   private:
    std::string _check;
  };

}  // namespace khr

#endif  // KHR_ERROR_HPP_
