// formula.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include "dsbb/formula.hpp"

#include <cctype>
#include <unordered_set>

#include "dsbb/error.hpp"

namespace dsbb {

FormulaPtr Formula::constant(bool value) {
  return FormulaPtr(new Formula(value ? Op::True : Op::False, {}, {}, nullptr, nullptr));
}

FormulaPtr Formula::atom(std::string predicate, std::vector<std::string> args) {
  return FormulaPtr(new Formula(Op::Atom, std::move(predicate), std::move(args), nullptr, nullptr));
}

FormulaPtr Formula::negation(FormulaPtr operand) {
  return FormulaPtr(new Formula(Op::Not, {}, {}, std::move(operand), nullptr));
}

FormulaPtr Formula::binary(Op op, FormulaPtr lhs, FormulaPtr rhs) {
  return FormulaPtr(new Formula(op, {}, {}, std::move(lhs), std::move(rhs)));
}

FormulaPtr Formula::quantified(Op op, std::vector<std::string> variables, FormulaPtr body) {
  return FormulaPtr(new Formula(op, {}, std::move(variables), std::move(body), nullptr));
}

std::string Formula::atom_name() const {
  if (terms_.empty()) return predicate_;
  std::string out = predicate_ + "(";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += ",";
    out += terms_[i];
  }
  return out + ")";
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.op() != b.op() || a.predicate() != b.predicate() || a.terms() != b.terms()) return false;
  if ((a.lhs() == nullptr) != (b.lhs() == nullptr) || (a.rhs() == nullptr) != (b.rhs() == nullptr)) return false;
  if (a.lhs() && !structurally_equal(*a.lhs(), *b.lhs())) return false;
  if (a.rhs() && !structurally_equal(*a.rhs(), *b.rhs())) return false;
  return true;
}

FormulaPtr fold(Op op, const std::vector<FormulaPtr>& parts, bool empty) {
  if (parts.empty()) return Formula::constant(empty);
  FormulaPtr acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::binary(op, acc, parts[i]);
  return acc;
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : name.substr(1)) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Colon, Not, And, Or, Implies, Iff, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", i}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", i}); ++i; continue;
      case ',': out.push_back({Tok::Comma, ",", i}); ++i; continue;
      case ':': out.push_back({Tok::Colon, ":", i}); ++i; continue;
      case '~': out.push_back({Tok::Not, "~", i}); ++i; continue;
      case '&': out.push_back({Tok::And, "&", i}); ++i; continue;
      case '|': out.push_back({Tok::Or, "|", i}); ++i; continue;
      default: break;
    }
    if (text.substr(i, 2) == "->") {
      out.push_back({Tok::Implies, "->", i});
      i += 2;
      continue;
    }
    if (text.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, "<->", i});
      i += 3;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, Dialect dialect) : tokens_(tokenize(text)), dialect_(dialect) {}

  FormulaPtr parse() {
    FormulaPtr f = formula();
    if (peek().kind != Tok::End) fail("unexpected " + describe(peek()));
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().column); }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what + ", found " + describe(peek()));
    ++pos_;
  }

  FormulaPtr formula() { return iff(); }

  FormulaPtr iff() {
    FormulaPtr lhs = imp();
    while (peek().kind == Tok::Iff) {
      ++pos_;
      lhs = Formula::binary(Op::Iff, lhs, imp());
    }
    return lhs;
  }

  FormulaPtr imp() {
    FormulaPtr lhs = disj();
    if (peek().kind == Tok::Implies) {
      ++pos_;
      return Formula::binary(Op::Implies, lhs, imp());
    }
    return lhs;
  }

  FormulaPtr disj() {
    FormulaPtr lhs = conj();
    while (peek().kind == Tok::Or) {
      ++pos_;
      lhs = Formula::binary(Op::Or, lhs, conj());
    }
    return lhs;
  }

  FormulaPtr conj() {
    FormulaPtr lhs = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      lhs = Formula::binary(Op::And, lhs, unary());
    }
    return lhs;
  }

  FormulaPtr unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        ++pos_;
        return Formula::negation(unary());
      case Tok::LParen: {
        ++pos_;
        FormulaPtr inner = formula();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        break;
      default:
        fail("expected a formula, found " + describe(t));
    }
    if (t.text == "true" || t.text == "false") {
      ++pos_;
      return Formula::constant(t.text == "true");
    }
    if (dialect_ == Dialect::Clausal && (t.text == "all" || t.text == "exists")) {
      ++pos_;
      const Op op = t.text == "all" ? Op::Forall : Op::Exists;
      std::vector<std::string> vars = identifier_list("a variable");
      expect(Tok::Colon, "':'");
      return Formula::quantified(op, std::move(vars), formula());
    }
    return atom();
  }

  FormulaPtr atom() {
    std::string name = next().text;
    std::vector<std::string> args;
    if (peek().kind == Tok::LParen) {
      ++pos_;
      args = identifier_list("an argument");
      expect(Tok::RParen, "')'");
    }
    return Formula::atom(std::move(name), std::move(args));
  }

  std::vector<std::string> identifier_list(const char* what) {
    std::vector<std::string> out;
    for (;;) {
      if (peek().kind != Tok::Ident) fail(std::string("expected ") + what + ", found " + describe(peek()));
      out.push_back(next().text);
      if (peek().kind != Tok::Comma) break;
      ++pos_;
    }
    return out;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Dialect dialect_;
};

int level(const Formula& f) {
  switch (f.op()) {
    case Op::Forall:
    case Op::Exists: return 0;
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    default: return 5;
  }
}

const char* symbol(Op op) {
  switch (op) {
    case Op::And: return " & ";
    case Op::Or: return " | ";
    case Op::Implies: return " -> ";
    case Op::Iff: return " <-> ";
    default: return "";
  }
}

void print(const Formula& f, std::string& out);

void print_child(const Formula& child, bool parens, std::string& out) {
  if (parens) out += "(";
  print(child, out);
  if (parens) out += ")";
}

void print(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::True: out += "true"; return;
    case Op::False: out += "false"; return;
    case Op::Atom: out += f.atom_name(); return;
    case Op::Not:
      out += "~";
      print_child(*f.lhs(), level(*f.lhs()) < 5, out);
      return;
    case Op::Forall:
    case Op::Exists: {
      out += f.op() == Op::Forall ? "all " : "exists ";
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        if (i > 0) out += ",";
        out += f.terms()[i];
      }
      out += ": ";
      print(*f.lhs(), out);
      return;
    }
    default: break;
  }
  const int l = level(f);
  const bool right_assoc = f.op() == Op::Implies;
  const int ll = level(*f.lhs());
  const int rl = level(*f.rhs());
  print_child(*f.lhs(), right_assoc ? ll <= l : ll < l, out);
  out += symbol(f.op());
  print_child(*f.rhs(), right_assoc ? rl < l : rl <= l, out);
}

void collect_atoms(const Formula& f, std::vector<std::string>& out, std::unordered_set<std::string>& seen) {
  if (f.op() == Op::Atom) {
    std::string name = f.atom_name();
    if (seen.insert(name).second) out.push_back(std::move(name));
    return;
  }
  if (f.lhs()) collect_atoms(*f.lhs(), out, seen);
  if (f.rhs()) collect_atoms(*f.rhs(), out, seen);
}

}  // namespace

FormulaPtr parse_formula(std::string_view text, Dialect dialect) { return Parser(text, dialect).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::vector<std::string> atom_names(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_atoms(f, out, seen);
  return out;
}

}  // namespace dsbb
