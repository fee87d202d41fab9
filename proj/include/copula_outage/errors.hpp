#ifndef COPULA_OUTAGE_ERRORS_HPP
#define COPULA_OUTAGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace copula_outage {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

class NoBracket : public Error {
public:
  using Error::Error;
};

class MaxIterExceeded : public Error {
public:
  using Error::Error;
};

class InvalidInterval : public Error {
public:
  using Error::Error;
};

/// A closed form was requested for marginals of the wrong family.
class TypeMismatch : public Error {
public:
  using Error::Error;
};

/// Monte Carlo audit of a worst-case construction disagreed with its target.
class ConstructionUnverified : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace copula_outage

#endif
