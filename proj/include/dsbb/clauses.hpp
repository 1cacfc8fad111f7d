// clauses.hpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dsbb/formula.hpp"

namespace dsbb {

// Interns ground atom names. Literal 2k is atom k, literal 2k+1 its negation.
class AtomTable {
 public:
  std::size_t intern(std::string_view name);
  std::optional<std::size_t> find(std::string_view name) const;
  const std::string& name(std::size_t atom) const { return names_[atom]; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using Literal = std::size_t;

inline Literal positive(std::size_t atom) { return 2 * atom; }
inline Literal negative(std::size_t atom) { return 2 * atom + 1; }
inline Literal negate(Literal l) { return l ^ 1U; }
inline std::size_t atom_of(Literal l) { return l >> 1U; }

// A disjunction of literals, sorted and free of duplicates. The empty clause is
// false.
using Clause = std::vector<Literal>;

inline constexpr std::size_t kMaxClauses = 4096;

bool is_tautology(const Clause& c);
bool subsumes(const Clause& small, const Clause& big);

// Resolvent of a and b on the atom of `lit` (lit in a, its negation in b).
Clause resolve(const Clause& a, const Clause& b, Literal lit);

// Conjunctive normal form of a quantifier-free formula: non-tautological,
// subsumption-free clauses. An empty result means the formula is valid. The
// empty clause comes only from a literal `false`; `p & ~p` stays {p, ~p}.
// Throws UnsupportedSentence beyond kMaxClauses clauses.
std::vector<Clause> clausify(const Formula& f, AtomTable& atoms);

// `p`, `~p | q`, or `false` for the empty clause.
std::string clause_string(const Clause& c, const AtomTable& atoms);

}  // namespace dsbb
