// test_atms.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include <cmath>

#include "doctest.h"
#include "dsbb/atms.hpp"
#include "dsbb/error.hpp"
#include "fixtures.hpp"
#include "properties.hpp"

using namespace dsbb;

namespace {

std::optional<Atms::NodeId> node(const Atms& atms, const std::string& name) {
  for (Atms::NodeId n = 0; n < atms.node_count(); ++n) {
    if (atms.name(n) == name) return n;
  }
  return std::nullopt;
}

std::string label_of(const Atms& atms, const std::string& name) {
  auto n = node(atms, name);
  return n ? atms.format(atms.label(*n)) : "absent";
}

void check_pair(const BeliefPair& r, double t, double f) {
  CHECK(std::abs(r.bel_true - t) <= 1e-9);
  CHECK(std::abs(r.bel_false - f) <= 1e-9);
}

BackendPtr prop(std::vector<std::string> atoms) {
  return std::make_shared<PropBackend>(PropSignature(std::move(atoms)));
}

}  // namespace

TEST_CASE("environments") {
  const auto a = Env::of({1, 3});
  const auto b = Env::of({1, 3, 70});
  CHECK(a.subset_of(b));
  CHECK_FALSE(b.subset_of(a));
  CHECK(a.unite(Env::of({70})) == b);
  CHECK(b.count() == 3);
  CHECK(b.members() == std::vector<std::size_t>{1, 3, 70});
  auto c = b;
  c.erase(70);
  CHECK(c == a);
  CHECK(Env().empty());
  Label l{b, a, Env::of({2}), a};
  minimize(l);
  CHECK(l.size() == 2);
}

TEST_CASE("labels") {
  Atms atms;
  const auto a = atms.add_assumption("A");
  const auto b = atms.add_assumption("B");
  const auto n1 = atms.add_node("n1");
  const auto n2 = atms.add_node("n2");
  atms.add_justification({a}, n1);
  atms.add_justification({b}, n1);
  CHECK(atms.format(atms.label(n1)) == "{{A},{B}}");
  atms.add_justification({n1, b}, n2);
  CHECK(atms.format(atms.label(n2)) == "{{B}}");
  CHECK_FALSE(atms.add_justification({b, n1}, n2));

  atms.add_justification({a, b}, atms.falsum());
  CHECK(atms.format(atms.nogoods()) == "{{A,B}}");
  CHECK_FALSE(atms.consistent(Env::of({0, 1})));
  CHECK(atms.consistent(Env::of({0})));
  CHECK(atms.format(atms.label(n1)) == "{{A},{B}}");

  const auto n3 = atms.add_node("n3");
  atms.add_justification({n2, a}, n3);
  CHECK(atms.label(n3).empty());
  atms.add_justification({}, n3);
  CHECK(atms.format(atms.label(n3)) == "{{}}");
}

TEST_CASE("label properties on random networks") {
  const auto r = properties::label_suite(60, 21);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("belief base labels") {
  auto b = AtmsBeliefBase(prop({"p", "q"})).tell("p -> q", {0.8, 0}).tell("p", {0.6, 0.3});
  CHECK(label_of(b.atms(), "q") == "{{A1,A2}}");
  CHECK(label_of(b.atms(), "~p") == "{{~A2}}");
  CHECK(b.atms().format(b.atms().nogoods()) == "{{A1,~A1},{A2,~A2}}");
  check_pair(b.ask("q"), 0.48, 0);
  check_pair(b.ask("p"), 0.6, 0.3);

  auto c = AtmsBeliefBase(prop({"p"})).tell("p", {1, 0});
  CHECK(label_of(c.atms(), "p") == "{{A1}}");
  const auto neg = label_of(c.atms(), "~p");
  CHECK((neg == "absent" || neg == "{}"));
  check_pair(c.ask("p"), 1, 0);
}

TEST_CASE("worked examples on the ATMS") {
  auto run = [](const fixtures::Script& s, std::size_t n = SIZE_MAX) {
    AtmsBeliefBase b(s.backend());
    for (std::size_t i = 0; i < s.tells.size() && i < n; ++i) b = b.tell(s.tells[i].sentence, {s.tells[i].x_t, s.tells[i].x_f});
    return b;
  };
  check_pair(run(fixtures::inline_example()).ask("Q(a)"), 0.48, 0);
  check_pair(run(fixtures::dog()).ask("animal(Alex)"), 0.63, 0);
  check_pair(run(fixtures::married()).ask("married(Robert)"), 0.686, 0);
  const auto k5 = run(fixtures::tweety(), 5);
  check_pair(k5.ask("flier(Tweety)"), 0.8, 0);
  check_pair(k5.ask("flier(Cippy)"), 0.8, 0);
  const auto k6 = run(fixtures::tweety());
  for (const auto* q : {"flier(Tweety)", "excp(Tweety)", "flier(Cippy)", "excp(Cippy)"}) {
    INFO(std::string(q));
    const auto sem = fixtures::tweety().run().ask(q);
    check_pair(k6.ask(q), sem.bel_true, sem.bel_false);
    check_pair(k6.ask_by_enumeration(q), sem.bel_true, sem.bel_false);
  }
  CHECK(k6.conflict() == doctest::Approx(0.8));
}

TEST_CASE("vacuous and empty") {
  AtmsBeliefBase b(prop({"p", "q"}));
  check_pair(b.ask("p"), 0, 0);
  check_pair(b.ask("p | ~p"), 1, 0);
  check_pair(b.ask("p & ~p"), 0, 1);
  auto c = b.tell("p", {0, 0});
  check_pair(c.ask("p"), 0, 0);
  CHECK(c.trace().size() == 1);
}

TEST_CASE("conflicts") {
  AtmsBeliefBase b(prop({"p"}));
  CHECK_THROWS_AS(b.tell("p", {1, 0}).tell("~p", {1, 0}), TotalConflict);
  CHECK_THROWS_AS(b.tell("p & ~p", {1, 0}), TotalConflict);
  CHECK_THROWS_AS(b.tell("p", {0.7, 0.7}), InvalidWeights);
  auto c = b.tell("p", {0.5, 0}).tell("~p", {0.5, 0});
  CHECK(c.conflict() == doctest::Approx(0.25));
  check_pair(c.ask("p"), 0.25 / 0.75, 0.25 / 0.75);
}

TEST_CASE("enumeration limit") {
  AtmsBeliefBase b(prop({"p"}));
  for (std::size_t i = 0; i <= kMaxOracleTells; ++i) b = b.tell("p", {0.1, 0});
  CHECK_THROWS_AS(b.ask_by_enumeration("p"), TooManyTells);
  CHECK(b.ask("p").bel_true == doctest::Approx(1 - std::pow(0.9, 13)));
}

TEST_CASE("frame backend on the ATMS") {
  auto be = std::make_shared<FrameBackend>(Frame({"a", "b", "c"}));
  auto b = AtmsBeliefBase(be).tell("{a,b}", {0.6, 0}).tell("c", {0.5, 0.2});
  const auto sem = BeliefBase::empty(be).tell("{a,b}", {0.6, 0}).tell("c", {0.5, 0.2});
  for (const char* q : {"a", "{a,b}", "c", "{}", "{a,b,c}"}) {
    INFO(std::string(q));
    check_pair(b.ask(q), sem.ask(q).bel_true, sem.ask(q).bel_false);
  }
}

TEST_CASE("engines agree on random scripts") {
  for (bool horn : {true, false}) {
    const auto r = properties::engine_suite(60, horn ? 31 : 32, horn);
    INFO(r.first_failure);
    CHECK(r.ok());
  }
}

TEST_CASE("dump") {
  auto b = AtmsBeliefBase(prop({"p", "q"})).tell("p -> q", {0.8, 0}).tell("p", {0.6, 0.3});
  const std::string expected =
      "node A1: label = {{A1}}\n"
      "node A2: label = {{A2}}\n"
      "node p: label = {{A2}}\n"
      "node q: label = {{A1,A2}}\n"
      "node q | ~p: label = {{A1}}\n"
      "node ~A1: label = {{~A1}}\n"
      "node ~A2: label = {{~A2}}\n"
      "node ~p: label = {{~A2}}\n"
      "nogoods = {{A1,~A1},{A2,~A2}}\n";
  CHECK(b.atms().dump() == expected);
}
