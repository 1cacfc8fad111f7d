// test_kr_prop.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include <random>

#include "dsbb/error.hpp"
#include "dsbb/kr_prop.hpp"
#include "oracles.hpp"

using namespace dsbb;

namespace {

Proposition m(const PropSignature& sig, const char* text) { return meaning(sig, *parse_formula(text)); }

SignatureError::Kind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const SignatureError& e) {
    return e.kind();
  }
  FAIL("no SignatureError");
  return SignatureError::Kind::InvalidName;
}

// Satisfying assignments by direct evaluation.
std::vector<std::size_t> models(const PropSignature& sig, const Formula& f) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < (std::size_t{1} << sig.atoms().size()); ++w) {
    auto truth = [&](const std::string& a) { return ((w >> *sig.index_of(a)) & 1U) != 0; };
    if (oracle::eval(f, truth)) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("world enumeration") {
  PropSignature pq({"p", "q"});
  CHECK(worlds(pq)->world_count() == 4);
  CHECK(worlds(pq)->label(0) == "p=0 q=0");
  CHECK(worlds(pq)->label(1) == "p=1 q=0");
  CHECK(worlds(pq)->label(3) == "p=1 q=1");
  CHECK(worlds(PropSignature({"p"}))->world_count() == 2);

  std::vector<std::string> many;
  for (int i = 0; i < 25; ++i) many.push_back("a" + std::to_string(i));
  CHECK(kind_of([&] { PropSignature s(many); }) == SignatureError::Kind::TooManyAtoms);
  CHECK(kind_of([] { PropSignature s({}); }) == SignatureError::Kind::EmptySignature);
  CHECK(kind_of([] { PropSignature s({"p", "p"}); }) == SignatureError::Kind::DuplicateName);
  CHECK(kind_of([] { PropSignature s({"1p"}); }) == SignatureError::Kind::InvalidName);
  CHECK(PropSignature({}, kDefaultMaxAtoms, 0).universe()->world_count() == 1);
}

TEST_CASE("meaning of simple formulas") {
  PropSignature sig({"p", "q"});
  CHECK(m(sig, "p | ~p").is_top());
  CHECK(m(sig, "p & ~p").is_empty());
  CHECK(m(sig, "p -> q").worlds() == std::vector<std::size_t>{0, 2, 3});
  CHECK(kind_of([&] { m(sig, "r"); }) == SignatureError::Kind::UnknownAtom);
  CHECK_THROWS_AS(meaning(sig, *parse_formula("all x: p(x)", Dialect::Clausal)), UnsupportedSentence);
}

TEST_CASE("meaning agrees with truth tables") {
  std::mt19937 rng(13);
  for (std::size_t n : {1U, 3U, 6U, 7U, 9U}) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < n; ++i) atoms.push_back("x" + std::to_string(i));
    PropSignature sig(atoms);
    for (int i = 0; i < 60; ++i) {
      auto f = oracle::random_formula(rng, atoms, 5);
      CHECK(meaning(sig, *f).worlds() == models(sig, *f));
    }
  }
}

TEST_CASE("meaning is a homomorphism and reflects entailment") {
  std::mt19937 rng(17);
  const std::vector<std::string> atoms{"p", "q", "r", "s"};
  PropSignature sig(atoms);
  for (int i = 0; i < 300; ++i) {
    auto a = oracle::random_formula(rng, atoms, 4);
    auto b = oracle::random_formula(rng, atoms, 4);
    CHECK(meaning(sig, *Formula::negation(a)) == complement(meaning(sig, *a)));
    CHECK(meaning(sig, *Formula::binary(Op::And, a, b)) == meet(meaning(sig, *a), meaning(sig, *b)));
    CHECK(meaning(sig, *Formula::binary(Op::Or, a, b)) == join(meaning(sig, *a), meaning(sig, *b)));

    bool entailed = true;
    for (std::size_t w = 0; w < 16; ++w) {
      auto truth = [&](const std::string& x) { return ((w >> *sig.index_of(x)) & 1U) != 0; };
      if (oracle::eval(*b, truth) && !oracle::eval(*a, truth)) entailed = false;
    }
    CHECK(entails(meaning(sig, *b), meaning(sig, *a)) == entailed);
  }
}

TEST_CASE("frames") {
  Frame f({"a", "b", "c"});
  CHECK(f.universe()->world_count() == 3);
  CHECK(frame_meaning(f, {"a", "b"}).worlds() == std::vector<std::size_t>{0, 1});
  CHECK(frame_meaning(f, {"a", "b", "c"}).is_top());
  CHECK(frame_meaning(f, {}).is_empty());
  CHECK(kind_of([&] { frame_meaning(f, {"d"}); }) == SignatureError::Kind::UnknownElement);
  CHECK(kind_of([] { Frame g({}); }) == SignatureError::Kind::EmptySignature);
  CHECK(kind_of([] { Frame g({"a", "a"}); }) == SignatureError::Kind::DuplicateName);

  CHECK(parse_frame_subset("{a, b}") == std::vector<std::string>{"a", "b"});
  CHECK(parse_frame_subset(" {} ").empty());
  CHECK(parse_frame_subset("c") == std::vector<std::string>{"c"});
  CHECK_THROWS_AS(parse_frame_subset("{a b}"), ParseError);
  CHECK_THROWS_AS(parse_frame_subset("{a,"), ParseError);
  CHECK_THROWS_AS(parse_frame_subset(""), ParseError);
}
