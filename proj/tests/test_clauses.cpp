// test_clauses.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include <random>

#include "doctest.h"
#include "dsbb/clauses.hpp"
#include "dsbb/error.hpp"
#include "oracles.hpp"

using namespace dsbb;

namespace {

std::vector<std::string> cnf(std::string_view text) {
  AtomTable atoms;
  std::vector<std::string> out;
  for (const auto& c : clausify(*parse_formula(text), atoms)) out.push_back(clause_string(c, atoms));
  return out;
}

bool eval_cnf(const std::vector<Clause>& cnf, const AtomTable& atoms, const std::function<bool(const std::string&)>& truth) {
  for (const auto& c : cnf) {
    bool sat = false;
    for (auto l : c) sat = sat || (truth(atoms.name(atom_of(l))) == (l % 2 == 0));
    if (!sat) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("literals") {
  CHECK(positive(3) == 6);
  CHECK(negative(3) == 7);
  CHECK(negate(6) == 7);
  CHECK(negate(7) == 6);
  CHECK(atom_of(7) == 3);
}

TEST_CASE("clause operations") {
  CHECK(is_tautology({0, 1}));
  CHECK_FALSE(is_tautology({0, 3}));
  CHECK(subsumes({0}, {0, 3}));
  CHECK_FALSE(subsumes({0, 3}, {0}));
  CHECK(subsumes({}, {2}));
  CHECK(resolve({0, 3}, {1, 4}, 0) == Clause{3, 4});
  CHECK(resolve({0}, {1}, 0).empty());
}

TEST_CASE("clausify") {
  CHECK(cnf("p -> q") == std::vector<std::string>{"q | ~p"});
  CHECK(cnf("p & (q | r)") == std::vector<std::string>{"p", "r | q"});
  CHECK(cnf("p | ~p").empty());
  CHECK(cnf("p & ~p") == std::vector<std::string>{"p", "~p"});
  CHECK(cnf("false") == std::vector<std::string>{"false"});
  CHECK(cnf("true").empty());
  CHECK(cnf("p & (p | q)") == std::vector<std::string>{"p"});
  CHECK(cnf("p <-> q").size() == 2);
}

TEST_CASE("clausify preserves models") {
  std::mt19937 rng(17);
  const std::vector<std::string> atoms{"p", "q", "r", "s"};
  for (int i = 0; i < 300; ++i) {
    auto f = oracle::random_formula(rng, atoms, 4);
    AtomTable table;
    const auto c = clausify(*f, table);
    for (unsigned w = 0; w < 16; ++w) {
      auto truth = [&](const std::string& x) { return ((w >> (x[0] - 'p')) & 1U) != 0; };
      INFO(to_string(*f));
      CHECK(oracle::eval(*f, truth) == eval_cnf(c, table, truth));
    }
    for (const auto& a : c) {
      CHECK_FALSE(is_tautology(a));
      for (const auto& b : c) {
        if (&a != &b) CHECK_FALSE(subsumes(a, b));
      }
    }
  }
}

TEST_CASE("clausify size limit") {
  std::string big;
  for (int i = 0; i < 13; ++i) big += (i ? " | " : "") + std::string("(a") + std::to_string(i) + " & b" + std::to_string(i) + ")";
  CHECK_THROWS_AS(cnf(big), UnsupportedSentence);
}
