#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxstrata {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ConductorMismatch : public Error {
 public:
  using Error::Error;
};

/// A cyclotomic value that was required to be rational is not.
class NotRational : public Error {
 public:
  NotRational(const std::string& what, std::string residue)
      : Error(what + ": " + residue), residue_(std::move(residue)) {}
  const std::string& residue() const noexcept { return residue_; }

 private:
  std::string residue_;
};

class NotIntegral : public Error {
 public:
  using Error::Error;
};

class InexactDivision : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class NoMatch : public Error {
 public:
  using Error::Error;
};

/// Several candidates satisfy a lookup; all of them are reported.
class Ambiguous : public Error {
 public:
  Ambiguous(const std::string& what, std::vector<std::string> candidates)
      : Error(what + ": " + join(candidates)), candidates_(std::move(candidates)) {}
  const std::vector<std::string>& candidates() const noexcept { return candidates_; }

 protected:
  static std::string join(const std::vector<std::string>& items) {
    std::string out = " {";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
    return out + "}";
  }

 private:
  std::vector<std::string> candidates_;
};

/// The b-maximal subset of X_C (or 'X_C) has more than one element.
class NonSingletonMax : public Ambiguous {
 public:
  NonSingletonMax(const std::string& class_label, std::vector<std::string> tied)
      : Ambiguous("maximal set is not a singleton for class " + class_label, std::move(tied)) {}
};

/// A cross-section filter left more than one class.
class NonUnique : public Ambiguous {
 public:
  NonUnique(const std::string& irr_label, std::vector<std::string> survivors)
      : Ambiguous("cross-section not unique for " + irr_label, std::move(survivors)) {}
};

/// An identity that must hold for every valid input failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class LabelMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace coxstrata
