// kr_clausal.hpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsbb/formula.hpp"
#include "dsbb/kr_prop.hpp"

namespace dsbb {

struct Predicate {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

// Name of the anonymous individual added to every Herbrand universe.
inline constexpr std::string_view kAnonymousConstant = "_0";

// Function-free first-order vocabulary, reduced to the propositional backend by
// enumerating ground atoms over the declared constants.
//
// Ground atoms are ordered by predicate (declaration order), then by argument
// tuples in lexicographic order of constant positions. Besides the declared
// constants the Herbrand universe contains `anonymous` unnamed individuals
// (`_0`, `_1`, ...), so that the negation of a universal sentence can be
// witnessed by an individual other than the named ones.
class ClausalSignature {
 public:
  // Throws SignatureError: InvalidName, DuplicateName, TooManyAtoms.
  ClausalSignature(std::vector<Predicate> predicates, std::vector<std::string> constants,
                   std::size_t anonymous = 1, std::size_t max_ground_atoms = kDefaultMaxAtoms);

  const std::vector<Predicate>& predicates() const { return predicates_; }
  // Declared constants followed by the anonymous ones.
  const std::vector<std::string>& constants() const { return constants_; }
  const std::vector<std::string>& declared_constants() const { return declared_; }
  std::size_t anonymous() const { return anonymous_; }
  std::size_t max_ground_atoms() const { return max_ground_atoms_; }

  std::optional<Predicate> predicate(std::string_view name) const;
  bool has_constant(std::string_view name) const;

  // The ground-atom signature that fixes the world universe.
  const PropSignature& ground_atoms() const { return ground_; }
  const UniversePtr& universe() const { return ground_.universe(); }

 private:
  std::vector<Predicate> predicates_;
  std::vector<std::string> declared_;
  std::vector<std::string> constants_;
  std::size_t anonymous_;
  std::size_t max_ground_atoms_;
  PropSignature ground_;
};

// Variables are the names bound by a quantifier. An unbound term is a constant,
// except that an unbound name shaped like a variable (`u`..`z`, optionally followed
// by digits) is reported as a FreeVariable.
bool is_variable_like(std::string_view name);

FormulaPtr parse_clausal(std::string_view text);

enum class SentenceKind { GroundLiteral, GroundFormula, UniversalClause, NegatedUniversal };

// Checks the supported fragment: every quantifier must be universal in effect
// (`all` under positive polarity, `exists` under negative polarity, never under
// `<->`), except that a whole sentence may be the negation of such a formula.
// Throws UnsupportedSentence or SignatureError(FreeVariable).
SentenceKind classify(const Formula& sentence);

// Grounds a sentence over the signature's Herbrand universe: `all` becomes a
// conjunction and `exists` a disjunction over all substitutions; ground atoms are
// named `pred(c1,...,cn)`. Throws SignatureError (UnknownPredicate, UnknownConstant,
// ArityMismatch, FreeVariable) or UnsupportedSentence.
FormulaPtr ground(const ClausalSignature& sig, const Formula& sentence);

Proposition meaning_cl(const ClausalSignature& sig, const Formula& sentence);

// Symbols a sentence uses, in order of first occurrence.
struct SymbolUsage {
  std::vector<Predicate> predicates;
  std::vector<std::string> constants;
};

// Throws SignatureError(ArityMismatch) when a predicate is used with two arities.
SymbolUsage harvest(const Formula& sentence);

// `sig` extended with whatever `usage` mentions that it lacks; nullopt when
// nothing is missing. Throws SignatureError(ArityMismatch, TooManyAtoms).
std::optional<ClausalSignature> extend(const ClausalSignature& sig, const SymbolUsage& usage);

}  // namespace dsbb
