// formula.hpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dsbb {

enum class Op { True, False, Atom, Not, And, Or, Implies, Iff, Forall, Exists };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula tree. Atoms carry a predicate name and an (optionally empty)
// argument list; the propositional backend treats the whole `pred(a,b)` as one
// opaque atom name. Quantifier nodes only appear in the clausal dialect.
class Formula {
 public:
  static FormulaPtr constant(bool value);
  static FormulaPtr atom(std::string predicate, std::vector<std::string> args = {});
  static FormulaPtr negation(FormulaPtr operand);
  static FormulaPtr binary(Op op, FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr quantified(Op op, std::vector<std::string> variables, FormulaPtr body);

  Op op() const { return op_; }
  const std::string& predicate() const { return predicate_; }
  // Atom arguments, or the bound variables of a quantifier.
  const std::vector<std::string>& terms() const { return terms_; }
  // Operand of Not, body of a quantifier, or left side of a binary connective.
  const FormulaPtr& lhs() const { return lhs_; }
  const FormulaPtr& rhs() const { return rhs_; }

  bool is_binary() const { return op_ == Op::And || op_ == Op::Or || op_ == Op::Implies || op_ == Op::Iff; }
  bool is_quantifier() const { return op_ == Op::Forall || op_ == Op::Exists; }

  // `pred` or `pred(a,b)`.
  std::string atom_name() const;

 private:
  Formula(Op op, std::string predicate, std::vector<std::string> terms, FormulaPtr lhs, FormulaPtr rhs)
      : op_(op), predicate_(std::move(predicate)), terms_(std::move(terms)), lhs_(std::move(lhs)),
        rhs_(std::move(rhs)) {}

  Op op_;
  std::string predicate_;
  std::vector<std::string> terms_;
  FormulaPtr lhs_;
  FormulaPtr rhs_;
};

bool structurally_equal(const Formula& a, const Formula& b);

// Folds `parts` with a left-associated binary connective; `empty` is returned for
// an empty list.
FormulaPtr fold(Op op, const std::vector<FormulaPtr>& parts, bool empty);

enum class Dialect {
  Propositional,  // no quantifiers; `all` and `exists` are ordinary atom names
  Clausal,        // adds `all VARS: body` and `exists VARS: body`
};

// Grammar (whitespace insensitive):
//   formula := iff
//   iff     := imp ("<->" imp)*
//   imp     := or ("->" imp)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "(" formula ")" | "true" | "false" | ATOM
//            | ("all" | "exists") VARLIST ":" formula        (clausal only)
//   ATOM    := IDENT [ "(" IDENT ("," IDENT)* ")" ]
// Throws ParseError carrying the 0-based column of the offending character.
FormulaPtr parse_formula(std::string_view text, Dialect dialect = Dialect::Propositional);

// Prints with the minimum parentheses needed for parse_formula to rebuild the same tree.
std::string to_string(const Formula& f);

// Atom names in order of first occurrence.
std::vector<std::string> atom_names(const Formula& f);

bool is_identifier(std::string_view name);

}  // namespace dsbb
