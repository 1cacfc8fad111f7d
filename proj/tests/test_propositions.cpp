// test_propositions.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include <random>
#include <vector>

#include "dsbb/error.hpp"
#include "dsbb/propositions.hpp"

using namespace dsbb;

namespace {

Proposition set_of(const UniversePtr& u, std::vector<std::size_t> w) { return Proposition::from_worlds(u, w); }

Proposition random_prop(std::mt19937& rng, const UniversePtr& u) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < u->world_count(); ++i) {
    if (rng() % 2) w.push_back(i);
  }
  return set_of(u, w);
}

}  // namespace

TEST_CASE("top and bottom") {
  auto u4 = WorldUniverse::create(4);
  CHECK(Proposition::top(u4).worlds() == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(Proposition::top(WorldUniverse::create(1)).worlds() == std::vector<std::size_t>{0});
  CHECK(Proposition::bottom(u4).worlds().empty());
  CHECK(is_empty(Proposition::bottom(u4)));

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto p = random_prop(rng, u4);
    CHECK(entails(Proposition::top(u4), p) == (p == Proposition::top(u4)));
    CHECK(entails(Proposition::bottom(u4), p));
  }
}

TEST_CASE("meet, complement and entails") {
  auto u = WorldUniverse::create(4);
  CHECK(meet(set_of(u, {1, 3}), set_of(u, {3})) == set_of(u, {3}));
  auto p = set_of(u, {0, 2});
  CHECK(meet(p, Proposition::top(u)) == p);
  CHECK(meet(p, complement(p)) == Proposition::bottom(u));
  CHECK(entails(set_of(u, {3}), set_of(u, {1, 3})));
  CHECK_FALSE(entails(set_of(u, {1, 3}), set_of(u, {3})));
  CHECK(complement(complement(p)) == p);
}

TEST_CASE("universe identity") {
  auto a = WorldUniverse::create(4);
  auto b = WorldUniverse::create(4);
  CHECK(a->id() != b->id());
  CHECK(Proposition::top(a) != Proposition::top(b));
  CHECK_THROWS_AS(meet(Proposition::top(a), Proposition::top(b)), UniverseMismatch);
  CHECK_THROWS_AS(entails(Proposition::top(a), Proposition::top(b)), UniverseMismatch);
  CHECK_THROWS_AS(WorldUniverse::create(0), SignatureError);
  CHECK_THROWS_AS(WorldUniverse::create((std::size_t{1} << 20) + 1), SignatureError);
}

TEST_CASE("tail bits stay clear") {
  auto u = WorldUniverse::create(70);
  auto top = Proposition::top(u);
  CHECK(top.count() == 70);
  CHECK(complement(top).is_empty());
  CHECK(complement(Proposition::bottom(u)) == top);
  auto from = Proposition::from_words(u, {~0ULL, ~0ULL});
  CHECK(from == top);
}

TEST_CASE("Boolean algebra laws on random sets") {
  std::mt19937 rng(11);
  for (std::size_t n : {1U, 5U, 64U, 65U, 130U}) {
    auto u = WorldUniverse::create(n);
    for (int i = 0; i < 100; ++i) {
      auto p = random_prop(rng, u);
      auto q = random_prop(rng, u);
      auto r = random_prop(rng, u);
      CHECK(meet(p, q) == meet(q, p));
      CHECK(join(p, q) == join(q, p));
      CHECK(meet(meet(p, q), r) == meet(p, meet(q, r)));
      CHECK(join(join(p, q), r) == join(p, join(q, r)));
      CHECK(meet(p, join(p, q)) == p);
      CHECK(join(p, meet(p, q)) == p);
      CHECK(join(p, q) == complement(meet(complement(p), complement(q))));
      CHECK(complement(meet(p, q)) == join(complement(p), complement(q)));
      CHECK(complement(complement(p)) == p);
      CHECK(entails(p, q) == is_empty(meet(p, complement(q))));
      std::size_t both = 0;
      for (std::size_t w = 0; w < n; ++w) both += p.contains(w) && q.contains(w);
      CHECK(meet(p, q).count() == both);
    }
  }
}
