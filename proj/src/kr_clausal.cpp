// kr_clausal.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include "dsbb/kr_clausal.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "dsbb/error.hpp"

namespace dsbb {

namespace {

bool is_reserved_constant(std::string_view name) {
  return name.size() >= 2 && name.front() == '_' &&
         std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    out *= base;
    if (out > cap) return cap + 1;
  }
  return out;
}

// Odometer over tuples of constant positions, last position fastest. Returns
// false after the last tuple.
bool advance(std::vector<std::size_t>& tuple, std::size_t base) {
  for (std::size_t pos = tuple.size(); pos > 0; --pos) {
    if (++tuple[pos - 1] < base) return true;
    tuple[pos - 1] = 0;
  }
  return false;
}

std::vector<std::string> enumerate_ground_atoms(const std::vector<Predicate>& predicates,
                                                const std::vector<std::string>& constants, std::size_t max_atoms) {
  std::size_t total = 0;
  for (const auto& p : predicates) {
    total += checked_power(constants.size(), p.arity, max_atoms);
    if (total > max_atoms) {
      throw SignatureError(SignatureError::Kind::TooManyAtoms,
                           "the Herbrand base exceeds the maximum of " + std::to_string(max_atoms) + " ground atoms");
    }
  }
  std::vector<std::string> atoms;
  atoms.reserve(total);
  for (const auto& p : predicates) {
    std::vector<std::size_t> tuple(p.arity, 0);
    do {
      std::vector<std::string> args;
      args.reserve(p.arity);
      for (std::size_t i : tuple) args.push_back(constants[i]);
      atoms.push_back(Formula::atom(p.name, std::move(args))->atom_name());
    } while (advance(tuple, constants.size()));
  }
  return atoms;
}

struct Scope {
  std::vector<std::string> names;
  bool bound(const std::string& n) const { return std::find(names.rbegin(), names.rend(), n) != names.rend(); }
};

void check_terms(const Formula& atom, const Scope& scope) {
  for (const auto& t : atom.terms()) {
    if (!scope.bound(t) && is_variable_like(t)) {
      throw SignatureError(SignatureError::Kind::FreeVariable,
                           "free variable '" + t + "' in " + atom.atom_name() + "; sentences must be closed");
    }
  }
}

// Returns false when a quantifier is not universal in effect at its position.
bool universal_in_effect(const Formula& f, bool positive, bool under_iff, Scope& scope, bool& has_quantifier) {
  switch (f.op()) {
    case Op::True:
    case Op::False: return true;
    case Op::Atom: check_terms(f, scope); return true;
    case Op::Not: return universal_in_effect(*f.lhs(), !positive, under_iff, scope, has_quantifier);
    case Op::And:
    case Op::Or:
      return universal_in_effect(*f.lhs(), positive, under_iff, scope, has_quantifier) &&
             universal_in_effect(*f.rhs(), positive, under_iff, scope, has_quantifier);
    case Op::Implies:
      return universal_in_effect(*f.lhs(), !positive, under_iff, scope, has_quantifier) &&
             universal_in_effect(*f.rhs(), positive, under_iff, scope, has_quantifier);
    case Op::Iff:
      return universal_in_effect(*f.lhs(), positive, true, scope, has_quantifier) &&
             universal_in_effect(*f.rhs(), positive, true, scope, has_quantifier);
    case Op::Forall:
    case Op::Exists: {
      has_quantifier = true;
      const bool ok = !under_iff && ((f.op() == Op::Forall) == positive);
      const std::size_t mark = scope.names.size();
      for (const auto& v : f.terms()) scope.names.push_back(v);
      const bool body_ok = universal_in_effect(*f.lhs(), positive, under_iff, scope, has_quantifier);
      scope.names.resize(mark);
      return ok && body_ok;
    }
  }
  return true;
}

class Grounder {
 public:
  explicit Grounder(const ClausalSignature& sig) : sig_(sig) {}

  FormulaPtr run(const Formula& f) {
    switch (f.op()) {
      case Op::True:
      case Op::False: return Formula::constant(f.op() == Op::True);
      case Op::Atom: return atom(f);
      case Op::Not: return Formula::negation(run(*f.lhs()));
      case Op::Forall:
      case Op::Exists: return quantifier(f);
      default: return Formula::binary(f.op(), run(*f.lhs()), run(*f.rhs()));
    }
  }

 private:
  FormulaPtr atom(const Formula& f) {
    auto pred = sig_.predicate(f.predicate());
    if (!pred) {
      throw SignatureError(SignatureError::Kind::UnknownPredicate, "unknown predicate '" + f.predicate() + "'");
    }
    if (pred->arity != f.terms().size()) {
      throw SignatureError(SignatureError::Kind::ArityMismatch,
                           "predicate '" + f.predicate() + "' has arity " + std::to_string(pred->arity) + ", used with " +
                               std::to_string(f.terms().size()) + " arguments");
    }
    std::vector<std::string> args;
    args.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
      if (auto it = std::find_if(bindings_.rbegin(), bindings_.rend(), [&](const auto& b) { return b.first == t; });
          it != bindings_.rend()) {
        args.push_back(it->second);
      } else if (sig_.has_constant(t)) {
        args.push_back(t);
      } else if (is_variable_like(t)) {
        throw SignatureError(SignatureError::Kind::FreeVariable, "free variable '" + t + "'");
      } else {
        throw SignatureError(SignatureError::Kind::UnknownConstant, "unknown constant '" + t + "'");
      }
    }
    return Formula::atom(f.predicate(), std::move(args));
  }

  FormulaPtr quantifier(const Formula& f) {
    const auto& vars = f.terms();
    const auto& constants = sig_.constants();
    std::vector<FormulaPtr> instances;
    std::vector<std::size_t> tuple(vars.size(), 0);
    const std::size_t mark = bindings_.size();
    do {
      bindings_.resize(mark);
      for (std::size_t i = 0; i < vars.size(); ++i) bindings_.emplace_back(vars[i], constants[tuple[i]]);
      instances.push_back(run(*f.lhs()));
    } while (advance(tuple, constants.size()));
    bindings_.resize(mark);
    const bool universal = f.op() == Op::Forall;
    return fold(universal ? Op::And : Op::Or, instances, universal);
  }

  const ClausalSignature& sig_;
  std::vector<std::pair<std::string, std::string>> bindings_;
};

void collect(const Formula& f, Scope& scope, SymbolUsage& usage, std::unordered_set<std::string>& seen_constants) {
  switch (f.op()) {
    case Op::Atom: {
      auto it = std::find_if(usage.predicates.begin(), usage.predicates.end(),
                             [&](const Predicate& p) { return p.name == f.predicate(); });
      if (it == usage.predicates.end()) {
        usage.predicates.push_back({f.predicate(), f.terms().size()});
      } else if (it->arity != f.terms().size()) {
        throw SignatureError(SignatureError::Kind::ArityMismatch,
                             "predicate '" + f.predicate() + "' used with different arities");
      }
      for (const auto& t : f.terms()) {
        if (scope.bound(t) || is_variable_like(t)) continue;
        if (seen_constants.insert(t).second) usage.constants.push_back(t);
      }
      return;
    }
    case Op::Forall:
    case Op::Exists: {
      const std::size_t mark = scope.names.size();
      for (const auto& v : f.terms()) scope.names.push_back(v);
      collect(*f.lhs(), scope, usage, seen_constants);
      scope.names.resize(mark);
      return;
    }
    default:
      if (f.lhs()) collect(*f.lhs(), scope, usage, seen_constants);
      if (f.rhs()) collect(*f.rhs(), scope, usage, seen_constants);
  }
}

}  // namespace

ClausalSignature::ClausalSignature(std::vector<Predicate> predicates, std::vector<std::string> constants,
                                   std::size_t anonymous, std::size_t max_ground_atoms)
    : predicates_(std::move(predicates)),
      declared_(std::move(constants)),
      anonymous_(declared_.empty() ? std::max<std::size_t>(anonymous, 1) : anonymous),
      max_ground_atoms_(max_ground_atoms),
      ground_([&] {
        std::unordered_set<std::string> seen;
        for (const auto& p : predicates_) {
          if (!is_identifier(p.name)) {
            throw SignatureError(SignatureError::Kind::InvalidName, "invalid predicate name '" + p.name + "'");
          }
          if (!seen.insert(p.name).second) {
            throw SignatureError(SignatureError::Kind::DuplicateName, "duplicate predicate '" + p.name + "'");
          }
        }
        seen.clear();
        constants_ = declared_;
        for (const auto& c : declared_) {
          if (!is_identifier(c) || is_reserved_constant(c)) {
            throw SignatureError(SignatureError::Kind::InvalidName, "invalid constant name '" + c + "'");
          }
          if (!seen.insert(c).second) {
            throw SignatureError(SignatureError::Kind::DuplicateName, "duplicate constant '" + c + "'");
          }
        }
        for (std::size_t i = 0; i < anonymous_; ++i) constants_.push_back("_" + std::to_string(i));
        return PropSignature(enumerate_ground_atoms(predicates_, constants_, max_ground_atoms_), max_ground_atoms_, 0);
      }()) {}

std::optional<Predicate> ClausalSignature::predicate(std::string_view name) const {
  for (const auto& p : predicates_) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

bool ClausalSignature::has_constant(std::string_view name) const {
  return std::find(constants_.begin(), constants_.end(), name) != constants_.end();
}

bool is_variable_like(std::string_view name) {
  if (name.empty() || name.front() < 'u' || name.front() > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

FormulaPtr parse_clausal(std::string_view text) { return parse_formula(text, Dialect::Clausal); }

SentenceKind classify(const Formula& sentence) {
  Scope scope;
  bool has_quantifier = false;
  if (universal_in_effect(sentence, true, false, scope, has_quantifier)) {
    if (has_quantifier) return SentenceKind::UniversalClause;
    const Formula* f = &sentence;
    if (f->op() == Op::Not) f = f->lhs().get();
    return f->op() == Op::Atom ? SentenceKind::GroundLiteral : SentenceKind::GroundFormula;
  }
  if (sentence.op() == Op::Not) {
    has_quantifier = false;
    if (universal_in_effect(*sentence.lhs(), true, false, scope, has_quantifier)) {
      return SentenceKind::NegatedUniversal;
    }
  }
  throw UnsupportedSentence(
      "only universally quantified sentences (existentials in antecedents) and their negations are supported: " +
      to_string(sentence));
}

FormulaPtr ground(const ClausalSignature& sig, const Formula& sentence) {
  classify(sentence);
  return Grounder(sig).run(sentence);
}

Proposition meaning_cl(const ClausalSignature& sig, const Formula& sentence) {
  return meaning(sig.ground_atoms(), *ground(sig, sentence));
}

SymbolUsage harvest(const Formula& sentence) {
  SymbolUsage usage;
  Scope scope;
  std::unordered_set<std::string> seen;
  collect(sentence, scope, usage, seen);
  return usage;
}

std::optional<ClausalSignature> extend(const ClausalSignature& sig, const SymbolUsage& usage) {
  auto predicates = sig.predicates();
  auto constants = sig.declared_constants();
  bool changed = false;
  for (const auto& p : usage.predicates) {
    auto existing = sig.predicate(p.name);
    if (!existing) {
      predicates.push_back(p);
      changed = true;
    } else if (existing->arity != p.arity) {
      throw SignatureError(SignatureError::Kind::ArityMismatch, "predicate '" + p.name + "' has arity " +
                                                                    std::to_string(existing->arity) + ", used with " +
                                                                    std::to_string(p.arity) + " arguments");
    }
  }
  for (const auto& c : usage.constants) {
    if (!sig.has_constant(c)) {
      constants.push_back(c);
      changed = true;
    }
  }
  if (!changed) return std::nullopt;
  return ClausalSignature(std::move(predicates), std::move(constants), sig.anonymous(), sig.max_ground_atoms());
}

}  // namespace dsbb
