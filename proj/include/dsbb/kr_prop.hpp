// kr_prop.hpp
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
#include "dsbb/propositions.hpp"

namespace dsbb {

inline constexpr std::size_t kDefaultMaxAtoms = 20;

// A finite set of atom names. World i of the universe is the assignment whose
// atom j is true iff bit j of i is set.
class PropSignature {
 public:
  // Throws SignatureError: EmptySignature, DuplicateName, InvalidName, TooManyAtoms.
  // `min_atoms` = 0 admits the one-world universe of an empty vocabulary.
  explicit PropSignature(std::vector<std::string> atoms, std::size_t max_atoms = kDefaultMaxAtoms,
                         std::size_t min_atoms = 1);

  const std::vector<std::string>& atoms() const { return atoms_; }
  const UniversePtr& universe() const { return universe_; }
  std::optional<std::size_t> index_of(std::string_view atom) const;

 private:
  std::vector<std::string> atoms_;
  std::unordered_map<std::string, std::size_t> index_;
  UniversePtr universe_;
};

// The universe of the signature: 2^|atoms| truth assignments.
const UniversePtr& worlds(const PropSignature& sig);

// Set of assignments satisfying f. Every atom of f must be in the signature
// (SignatureError UnknownAtom otherwise); quantified formulas are rejected.
Proposition meaning(const PropSignature& sig, const Formula& f);

// Atom names are `[A-Za-z_][A-Za-z0-9_]*`, optionally followed by a parenthesised
// argument list, e.g. `dog(Alex)`.
bool is_atom_name(std::string_view name);

// Frame of discernment: exhaustive, mutually exclusive hypotheses, one world each.
class Frame {
 public:
  // Throws SignatureError: EmptySignature, DuplicateName, InvalidName, TooManyWorlds.
  explicit Frame(std::vector<std::string> elements);

  const std::vector<std::string>& elements() const { return elements_; }
  const UniversePtr& universe() const { return universe_; }
  std::optional<std::size_t> index_of(std::string_view element) const;

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  UniversePtr universe_;
};

// The proposition "the answer is in `subset`". Throws SignatureError UnknownElement.
Proposition frame_meaning(const Frame& frame, const std::vector<std::string>& subset);

// Parses a frame sentence: `{a, b}`, `{}` or a bare element name `a`.
// Throws ParseError.
std::vector<std::string> parse_frame_subset(std::string_view text);

}  // namespace dsbb
