// clauses.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include "dsbb/clauses.hpp"

#include <algorithm>
#include <iterator>

#include "dsbb/error.hpp"

namespace dsbb {

std::size_t AtomTable::intern(std::string_view name) {
  auto [it, inserted] = index_.emplace(std::string(name), names_.size());
  if (inserted) names_.emplace_back(name);
  return it->second;
}

std::optional<std::size_t> AtomTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool is_tautology(const Clause& c) {
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] == negate(c[i - 1])) return true;
  }
  return false;
}

bool subsumes(const Clause& small, const Clause& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Clause resolve(const Clause& a, const Clause& b, Literal lit) {
  Clause out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  std::erase_if(out, [&](Literal l) { return atom_of(l) == atom_of(lit); });
  return out;
}

namespace {

using Cnf = std::vector<Clause>;

// Keeps the minimal clauses of `cnf` under subsumption.
Cnf reduce(Cnf cnf) {
  std::sort(cnf.begin(), cnf.end(), [](const Clause& a, const Clause& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  cnf.erase(std::unique(cnf.begin(), cnf.end()), cnf.end());
  Cnf out;
  for (auto& c : cnf) {
    if (std::none_of(out.begin(), out.end(), [&](const Clause& s) { return subsumes(s, c); })) out.push_back(std::move(c));
  }
  return out;
}

void check_size(const Cnf& cnf) {
  if (cnf.size() > kMaxClauses) {
    throw UnsupportedSentence("clause form exceeds " + std::to_string(kMaxClauses) + " clauses");
  }
}

Cnf conjoin(Cnf a, const Cnf& b) {
  a.insert(a.end(), b.begin(), b.end());
  return reduce(std::move(a));
}

Cnf disjoin(const Cnf& a, const Cnf& b) {
  if (a.size() * b.size() > 64 * kMaxClauses) {
    throw UnsupportedSentence("clause form exceeds " + std::to_string(kMaxClauses) + " clauses");
  }
  Cnf out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Clause c;
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(c));
      if (!is_tautology(c)) out.push_back(std::move(c));
    }
  }
  out = reduce(std::move(out));
  check_size(out);
  return out;
}

// CNF of f when `positive_polarity`, of ~f otherwise.
Cnf cnf(const Formula& f, bool positive_polarity, AtomTable& atoms) {
  const Cnf valid;
  const Cnf unsat{Clause{}};
  switch (f.op()) {
    case Op::True: return positive_polarity ? valid : unsat;
    case Op::False: return positive_polarity ? unsat : valid;
    case Op::Atom: {
      const std::size_t a = atoms.intern(f.atom_name());
      return {Clause{positive_polarity ? positive(a) : negative(a)}};
    }
    case Op::Not: return cnf(*f.lhs(), !positive_polarity, atoms);
    case Op::And:
      return positive_polarity ? conjoin(cnf(*f.lhs(), true, atoms), cnf(*f.rhs(), true, atoms))
                               : disjoin(cnf(*f.lhs(), false, atoms), cnf(*f.rhs(), false, atoms));
    case Op::Or:
      return positive_polarity ? disjoin(cnf(*f.lhs(), true, atoms), cnf(*f.rhs(), true, atoms))
                               : conjoin(cnf(*f.lhs(), false, atoms), cnf(*f.rhs(), false, atoms));
    case Op::Implies:
      return positive_polarity ? disjoin(cnf(*f.lhs(), false, atoms), cnf(*f.rhs(), true, atoms))
                               : conjoin(cnf(*f.lhs(), true, atoms), cnf(*f.rhs(), false, atoms));
    case Op::Iff: {
      // (a -> b) & (b -> a), or for the negation (a | b) & (~a | ~b).
      const Cnf la = cnf(*f.lhs(), true, atoms);
      const Cnf na = cnf(*f.lhs(), false, atoms);
      const Cnf lb = cnf(*f.rhs(), true, atoms);
      const Cnf nb = cnf(*f.rhs(), false, atoms);
      return positive_polarity ? conjoin(disjoin(na, lb), disjoin(nb, la)) : conjoin(disjoin(la, lb), disjoin(na, nb));
    }
    case Op::Forall:
    case Op::Exists: break;
  }
  throw UnsupportedSentence("clause form needs a quantifier-free formula");
}

}  // namespace

std::vector<Clause> clausify(const Formula& f, AtomTable& atoms) {
  Cnf out = cnf(f, true, atoms);
  check_size(out);
  return out;
}

std::string clause_string(const Clause& c, const AtomTable& atoms) {
  if (c.empty()) return "false";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += " | ";
    if (c[i] & 1U) out += '~';
    out += atoms.name(atom_of(c[i]));
  }
  return out;
}

}  // namespace dsbb
