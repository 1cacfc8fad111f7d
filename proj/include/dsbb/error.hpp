// error.hpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsbb {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two propositions (or a proposition and a BPA) from different world universes met.
class UniverseMismatch : public Error {
 public:
  UniverseMismatch() : Error("propositions belong to different world universes") {}
};

// Dempster's rule is undefined: the normalisation constant is (numerically) zero.
class TotalConflict : public Error {
 public:
  explicit TotalConflict(double conflict)
      : Error("total conflict (conflict mass " + std::to_string(conflict) + ")"), conflict_(conflict) {}
  double conflict() const { return conflict_; }

 private:
  double conflict_;
};

class ParseError : public Error {
 public:
  // `column` is the 0-based character offset at which the problem was detected.
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class SignatureError : public Error {
 public:
  enum class Kind {
    TooManyAtoms,
    TooManyWorlds,
    InvalidName,
    DuplicateName,
    EmptySignature,
    UnknownAtom,
    UnknownElement,
    UnknownPredicate,
    UnknownConstant,
    ArityMismatch,
    FreeVariable,
  };

  SignatureError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// The sentence is outside the fragment an operation supports.
class UnsupportedSentence : public Error {
 public:
  using Error::Error;
};

class InvalidWeights : public Error {
 public:
  using Error::Error;
};

class InvalidBpa : public Error {
 public:
  using Error::Error;
};

class TooManyTells : public Error {
 public:
  using Error::Error;
};

}  // namespace dsbb
