#pragma once

#include <stdexcept>
#include <string>

namespace soncoup {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
public:
  ZeroDenominator() : Error("zero denominator") {}
};

/// A rational function was evaluated at one of its poles.
class PoleError : public Error {
public:
  using Error::Error;
};

/// Gamma factors survived reduction; the product was not rational in n.
class GammaResidueError : public Error {
public:
  explicit GammaResidueError(std::string residue)
      : Error("gamma factors did not cancel: " + residue), residue_(std::move(residue)) {}
  const std::string& residue() const noexcept { return residue_; }

private:
  std::string residue_;
};

/// A 6j-symbol was requested for labels where one of the 3j factors vanishes.
class UndefinedBySelectionRules : public Error {
public:
  using Error::Error;
};

class ResolutionTooLow : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace soncoup
