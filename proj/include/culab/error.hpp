#ifndef CULAB_ERROR_HPP
#define CULAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace culab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A model document or table violates one of the positively ordered monoid laws.
class ValidationError : public Error {
 public:
  ValidationError(std::string law, const std::string& what)
      : Error(what), law_(std::move(law)) {}
  const std::string& law() const noexcept { return law_; }

 private:
  std::string law_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotAScale : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class HypothesisNotChecked : public Error {
 public:
  using Error::Error;
};

// Operation called on a model it does not accept (e.g. a pre-ordered model).
class UnsupportedModel : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant; never expected for validated input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace culab

#endif  // CULAB_ERROR_HPP
