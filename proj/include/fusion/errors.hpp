#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown label: " + label), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// A fusion entry is absent from an explicit table.
class MissingFusion : public Error {
 public:
  using Error::Error;
};

class NotSimple : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A datum failed validation where a validated one was required.
class InvalidDatum : public Error {
 public:
  using Error::Error;
};

/// Bad subsets, dimension mismatches and other code-level misuse.
class CodeError : public Error {
 public:
  using Error::Error;
};

/// A requested size exceeds a configured bound.
class ResourceBound : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Induction of an object outside the centralizer of the algebra.
class NonLocal : public Error {
 public:
  using Error::Error;
};

/// The extension construction met data it cannot model consistently
/// (non-constant twist on an orbit, fusion leaving the domain, ...).
class ModelingError : public Error {
 public:
  using Error::Error;
};

}  // namespace fusion
