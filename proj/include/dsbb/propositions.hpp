// propositions.hpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace dsbb {

// A finite, explicitly enumerated set of possible worlds. Every proposition lives
// in exactly one universe; the universe's id is its identity.
class WorldUniverse {
 public:
  using Labeler = std::function<std::string(std::size_t)>;

  static constexpr std::size_t kDefaultMaxWorlds = std::size_t{1} << 20;

  // Throws SignatureError(TooManyWorlds / EmptySignature).
  static std::shared_ptr<const WorldUniverse> create(std::size_t world_count, Labeler labeler = {},
                                                     std::size_t max_worlds = kDefaultMaxWorlds);

  std::uint64_t id() const { return id_; }
  std::size_t world_count() const { return world_count_; }
  std::size_t word_count() const { return (world_count_ + 63) / 64; }

  // Debug descriptor of a world; "w<i>" when no labeler was supplied.
  std::string label(std::size_t world) const;

 private:
  WorldUniverse(std::uint64_t id, std::size_t world_count, Labeler labeler)
      : id_(id), world_count_(world_count), labeler_(std::move(labeler)) {}

  std::uint64_t id_;
  std::size_t world_count_;
  Labeler labeler_;
};

using UniversePtr = std::shared_ptr<const WorldUniverse>;

// An element of the Boolean algebra of propositions: a set of worlds stored as a
// bitset. The bitset is canonical (bits past world_count are always zero), so
// equality of propositions is equality of words.
class Proposition {
 public:
  static Proposition top(UniversePtr universe);
  static Proposition bottom(UniversePtr universe);
  static Proposition from_worlds(UniversePtr universe, std::span<const std::size_t> worlds);
  // Bits beyond world_count are cleared; `words` must have word_count() entries.
  static Proposition from_words(UniversePtr universe, std::vector<std::uint64_t> words);

  const UniversePtr& universe() const { return universe_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool contains(std::size_t world) const;
  bool is_empty() const;
  bool is_top() const;
  std::size_t count() const;
  std::vector<std::size_t> worlds() const;

  friend bool operator==(const Proposition& a, const Proposition& b);
  // Total order: universe id first, then words lexicographically.
  friend std::strong_ordering operator<=>(const Proposition& a, const Proposition& b);

 private:
  Proposition(UniversePtr universe, std::vector<std::uint64_t> words)
      : universe_(std::move(universe)), words_(std::move(words)) {}

  UniversePtr universe_;
  std::vector<std::uint64_t> words_;
};

// Lattice operations. All throw UniverseMismatch on mixed universes.
Proposition meet(const Proposition& p, const Proposition& q);
Proposition join(const Proposition& p, const Proposition& q);
Proposition complement(const Proposition& p);
bool entails(const Proposition& p, const Proposition& q);
bool is_empty(const Proposition& p);
bool same_universe(const Proposition& p, const Proposition& q);

struct PropositionHash {
  std::size_t operator()(const Proposition& p) const;
};

}  // namespace dsbb
