#ifndef MODORDER_ERRORS_HPP_
#define MODORDER_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace modorder {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A single violated law together with the operands that break it.
  struct AxiomViolation {
    std::string                law;
    std::vector<std::uint32_t> operands;

    std::string message() const;
  };

  //! Thrown when tables fail a ring or module axiom.
  class AxiomError : public Error {
   public:
    explicit AxiomError(AxiomViolation v)
        : Error(v.message()), violation_(std::move(v)) {}

    AxiomViolation const& violation() const noexcept {
      return violation_;
    }

   private:
    AxiomViolation violation_;
  };

  //! Malformed input: wrong table shapes, out of range indices, bad
  //! arguments.
  class StructureError : public Error {
   public:
    using Error::Error;
  };

  //! An operation needs structure that is not present (usually an
  //! involution).
  class ConfigError : public Error {
   public:
    using Error::Error;
  };

  //! Input exceeds the desk-scale size caps.
  class CapacityError : public Error {
   public:
    using Error::Error;
  };

  //! Text or JSON could not be parsed.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  inline std::string AxiomViolation::message() const {
    std::string out = law;
    if (!operands.empty()) {
      out += " violated at (";
      for (std::size_t i = 0; i < operands.size(); ++i) {
        if (i != 0) {
          out += ",";
        }
        out += std::to_string(operands[i]);
      }
      out += ")";
    }
    return out;
  }

}  // namespace modorder

#endif  // MODORDER_ERRORS_HPP_
