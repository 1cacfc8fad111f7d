// propositions.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include "dsbb/propositions.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "dsbb/error.hpp"

namespace dsbb {

namespace {

std::atomic<std::uint64_t> next_universe_id{1};

std::uint64_t tail_mask(std::size_t world_count) {
  const std::size_t rem = world_count % 64;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

void require_same(const Proposition& p, const Proposition& q) {
  if (!same_universe(p, q)) throw UniverseMismatch();
}

}  // namespace

std::shared_ptr<const WorldUniverse> WorldUniverse::create(std::size_t world_count, Labeler labeler,
                                                           std::size_t max_worlds) {
  if (world_count == 0) {
    throw SignatureError(SignatureError::Kind::EmptySignature, "a world universe needs at least one world");
  }
  if (world_count > max_worlds) {
    throw SignatureError(SignatureError::Kind::TooManyWorlds,
                         "universe of " + std::to_string(world_count) + " worlds exceeds the maximum of " +
                             std::to_string(max_worlds));
  }
  return std::shared_ptr<const WorldUniverse>(
      new WorldUniverse(next_universe_id.fetch_add(1), world_count, std::move(labeler)));
}

std::string WorldUniverse::label(std::size_t world) const {
  if (labeler_) return labeler_(world);
  return "w" + std::to_string(world);
}

Proposition Proposition::top(UniversePtr universe) {
  std::vector<std::uint64_t> words(universe->word_count(), ~std::uint64_t{0});
  return from_words(std::move(universe), std::move(words));
}

Proposition Proposition::bottom(UniversePtr universe) {
  std::vector<std::uint64_t> words(universe->word_count(), 0);
  return Proposition(std::move(universe), std::move(words));
}

Proposition Proposition::from_worlds(UniversePtr universe, std::span<const std::size_t> worlds) {
  std::vector<std::uint64_t> words(universe->word_count(), 0);
  for (std::size_t w : worlds) {
    if (w >= universe->world_count()) throw Error("world index " + std::to_string(w) + " out of range");
    words[w / 64] |= std::uint64_t{1} << (w % 64);
  }
  return Proposition(std::move(universe), std::move(words));
}

Proposition Proposition::from_words(UniversePtr universe, std::vector<std::uint64_t> words) {
  if (words.size() != universe->word_count()) throw Error("bitset length does not match the universe");
  words.back() &= tail_mask(universe->world_count());
  return Proposition(std::move(universe), std::move(words));
}

bool Proposition::contains(std::size_t world) const {
  if (world >= universe_->world_count()) return false;
  return (words_[world / 64] >> (world % 64)) & 1U;
}

bool Proposition::is_empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Proposition::is_top() const { return count() == universe_->world_count(); }

std::size_t Proposition::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> Proposition::worlds() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool operator==(const Proposition& a, const Proposition& b) {
  return same_universe(a, b) && a.words_ == b.words_;
}

std::strong_ordering operator<=>(const Proposition& a, const Proposition& b) {
  if (auto c = a.universe_->id() <=> b.universe_->id(); c != 0) return c;
  return a.words_ <=> b.words_;
}

bool same_universe(const Proposition& p, const Proposition& q) {
  return p.universe()->id() == q.universe()->id();
}

Proposition meet(const Proposition& p, const Proposition& q) {
  require_same(p, q);
  std::vector<std::uint64_t> words(p.words().begin(), p.words().end());
  for (std::size_t i = 0; i < words.size(); ++i) words[i] &= q.words()[i];
  return Proposition::from_words(p.universe(), std::move(words));
}

Proposition join(const Proposition& p, const Proposition& q) {
  require_same(p, q);
  std::vector<std::uint64_t> words(p.words().begin(), p.words().end());
  for (std::size_t i = 0; i < words.size(); ++i) words[i] |= q.words()[i];
  return Proposition::from_words(p.universe(), std::move(words));
}

Proposition complement(const Proposition& p) {
  std::vector<std::uint64_t> words(p.words().begin(), p.words().end());
  for (auto& w : words) w = ~w;
  return Proposition::from_words(p.universe(), std::move(words));
}

bool entails(const Proposition& p, const Proposition& q) {
  require_same(p, q);
  for (std::size_t i = 0; i < p.words().size(); ++i) {
    if ((p.words()[i] & ~q.words()[i]) != 0) return false;
  }
  return true;
}

bool is_empty(const Proposition& p) { return p.is_empty(); }

std::size_t PropositionHash::operator()(const Proposition& p) const {
  std::uint64_t h = 1469598103934665603ULL ^ p.universe()->id();
  for (std::uint64_t w : p.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace dsbb
