// test_ds_core.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include <random>
#include <vector>

#include "dsbb/ds_core.hpp"
#include "dsbb/error.hpp"
#include "oracles.hpp"

using namespace dsbb;

namespace {

Proposition mask(const UniversePtr& u, std::uint64_t bits) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < u->world_count(); ++i) {
    if ((bits >> i) & 1U) w.push_back(i);
  }
  return Proposition::from_worlds(u, w);
}

std::uint64_t bits_of(const Proposition& p) { return p.words().empty() ? 0 : p.words()[0]; }

Bpa make(const UniversePtr& u, std::vector<std::pair<std::uint64_t, double>> focals) {
  std::vector<Focal> f;
  for (auto [b, m] : focals) f.push_back({mask(u, b), m});
  return Bpa::from_focals(u, f);
}

oracle::ds::Mass to_mass(const Bpa& k) {
  oracle::ds::Mass m;
  for (const auto& [p, v] : k.focals()) m[bits_of(p)] = v;
  return m;
}

Bpa random_bpa(std::mt19937& rng, const UniversePtr& u, int max_focals) {
  const std::uint64_t full = (std::uint64_t{1} << u->world_count()) - 1;
  std::uniform_int_distribution<int> count(1, max_focals);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::vector<std::pair<std::uint64_t, double>> f;
  double total = 0.0;
  for (int i = count(rng); i > 0; --i) {
    std::uint64_t b = 0;
    while (b == 0) b = rng() & full;
    const double w = weight(rng);
    f.emplace_back(b, w);
    total += w;
  }
  for (auto& [b, w] : f) w /= total;
  return make(u, f);
}

void check_valid(const Bpa& k) {
  double total = 0.0;
  for (const auto& [p, m] : k.focals()) {
    CHECK_FALSE(p.is_empty());
    CHECK(m > 1e-12);
    total += m;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

// Worlds 0..3 stand for the regions A, B, C, D.
constexpr std::uint64_t A = 1, B = 2, C = 4, D = 8, Omega = 15;

}  // namespace

TEST_CASE("vacuous BPA") {
  auto u = WorldUniverse::create(4);
  auto k = Bpa::vacuous(u);
  CHECK(k.size() == 1);
  CHECK(k.mass(Proposition::top(u)) == 1.0);
  CHECK(bel(k, Proposition::top(u)) == 1.0);
  for (std::uint64_t b = 0; b < Omega; ++b) CHECK(bel(k, mask(u, b)) == 0.0);
}

TEST_CASE("combination of the dog evidence") {
  auto u = WorldUniverse::create(4);
  auto rule = make(u, {{B | D, 0.9}, {Omega, 0.1}});
  auto fact = make(u, {{C | D, 0.7}, {A | B, 0.1}, {Omega, 0.2}});
  auto k = combine(rule, fact);
  CHECK(k.size() == 6);
  const std::vector<std::pair<std::uint64_t, double>> expected{{Omega, 0.02}, {A | B, 0.01}, {C | D, 0.07},
                                                                {B | D, 0.18}, {B, 0.09},     {D, 0.63}};
  for (auto [b, m] : expected) CHECK(k.mass(mask(u, b)) == doctest::Approx(m).epsilon(1e-9));
  CHECK(bel(k, mask(u, D)) == doctest::Approx(0.63).epsilon(1e-9));
  CHECK(bel(k, mask(u, A | C)) == doctest::Approx(0.0));
  CHECK(conflict(rule, fact) == doctest::Approx(0.0));
}

TEST_CASE("normalisation by the conflict") {
  auto u = WorldUniverse::create(2);
  auto k = combine(make(u, {{1, 0.6}, {3, 0.4}}), make(u, {{2, 0.5}, {3, 0.5}}));
  CHECK(conflict(make(u, {{1, 0.6}, {3, 0.4}}), make(u, {{2, 0.5}, {3, 0.5}})) == doctest::Approx(0.3));
  CHECK(k.mass(mask(u, 1)) == doctest::Approx(3.0 / 7).epsilon(1e-12));
  CHECK(k.mass(mask(u, 2)) == doctest::Approx(2.0 / 7).epsilon(1e-12));
  CHECK(k.mass(mask(u, 3)) == doctest::Approx(2.0 / 7).epsilon(1e-12));
}

TEST_CASE("total conflict") {
  auto u = WorldUniverse::create(2);
  CHECK_THROWS_AS(combine(make(u, {{1, 1.0}}), make(u, {{2, 1.0}})), TotalConflict);
  try {
    combine(make(u, {{1, 1.0}}), make(u, {{2, 1.0}}));
  } catch (const TotalConflict& e) {
    CHECK(e.conflict() == doctest::Approx(1.0));
  }
}

TEST_CASE("invalid BPAs") {
  auto u = WorldUniverse::create(3);
  auto other = WorldUniverse::create(3);
  CHECK_THROWS_AS(make(u, {{1, 0.5}}), InvalidBpa);
  CHECK_THROWS_AS(make(u, {{0, 0.5}, {1, 0.5}}), InvalidBpa);
  CHECK_THROWS_AS(make(u, {{1, -0.5}, {2, 1.5}}), InvalidBpa);
  std::vector<Focal> mixed{{Proposition::top(other), 1.0}};
  CHECK_THROWS_AS(Bpa::from_focals(u, mixed), UniverseMismatch);
  auto merged = make(u, {{1, 0.25}, {1, 0.25}, {7, 0.5}});
  CHECK(merged.size() == 2);
  CHECK(merged.mass(mask(u, 1)) == doctest::Approx(0.5));
}

TEST_CASE("vacuous BPA is neutral") {
  std::mt19937 rng(3);
  auto u = WorldUniverse::create(5);
  for (int i = 0; i < 50; ++i) {
    auto k = random_bpa(rng, u, 5);
    auto c = combine(k, Bpa::vacuous(u));
    CHECK(c.size() == k.size());
    for (const auto& [p, m] : k.focals()) CHECK(c.mass(p) == doctest::Approx(m).epsilon(1e-12));
  }
}

TEST_CASE("singletons plus the tautology give a discounted probability") {
  auto u = WorldUniverse::create(3);
  auto k = make(u, {{1, 0.2}, {2, 0.3}, {4, 0.1}, {7, 0.4}});
  CHECK(bel(k, mask(u, 3)) == doctest::Approx(0.5));
  CHECK(bel(k, mask(u, 6)) == doctest::Approx(0.4));
  CHECK(bel(k, mask(u, 7)) == doctest::Approx(1.0));
}

TEST_CASE("combination matches the subset oracle") {
  std::mt19937 rng(19);
  for (int i = 0; i < 300; ++i) {
    auto u = WorldUniverse::create(1 + rng() % 10);
    auto k1 = random_bpa(rng, u, 5);
    auto k2 = random_bpa(rng, u, 5);
    auto expected = oracle::ds::combine(to_mass(k1), to_mass(k2));
    if (!expected) {
      CHECK_THROWS_AS(combine(k1, k2), TotalConflict);
      continue;
    }
    auto k = combine(k1, k2);
    check_valid(k);
    CHECK(k.size() == expected->size());
    for (const auto& [b, m] : *expected) CHECK(k.mass(mask(u, b)) == doctest::Approx(m).epsilon(1e-9));
    for (std::uint64_t q = 0; q < (std::uint64_t{1} << u->world_count()); q += 1 + rng() % 7) {
      CHECK(bel(k, mask(u, q)) == doctest::Approx(oracle::ds::bel(*expected, q)).epsilon(1e-9));
    }
  }
}
