// fixtures.hpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dsbb/belief_base.hpp"

namespace fixtures {

struct Tell {
  std::string sentence;
  double x_t;
  double x_f;
};

struct Script {
  std::vector<dsbb::Predicate> predicates;
  std::vector<std::string> constants;
  std::vector<Tell> tells;

  dsbb::BackendPtr backend(std::vector<std::string> extra_constants = {}) const {
    auto c = constants;
    c.insert(c.end(), extra_constants.begin(), extra_constants.end());
    return std::make_shared<dsbb::ClausalBackend>(dsbb::ClausalSignature(predicates, c));
  }

  // Belief base after the first `n` tells (all of them by default).
  dsbb::BeliefBase run(std::size_t n = SIZE_MAX, std::vector<std::string> extra_constants = {}) const {
    auto b = dsbb::BeliefBase::empty(backend(std::move(extra_constants)));
    for (std::size_t i = 0; i < tells.size() && i < n; ++i) b = b.tell(tells[i].sentence, {tells[i].x_t, tells[i].x_f});
    return b;
  }
};

inline Script dog() {
  return {{{"dog", 1}, {"animal", 1}},
          {"Alex"},
          {{"all x: dog(x) -> animal(x)", 0.9, 0.0}, {"dog(Alex)", 0.7, 0.1}}};
}

inline Script inline_example() {
  return {{{"P", 1}, {"Q", 1}}, {"a"}, {{"all x: P(x) -> Q(x)", 0.8, 0.0}, {"P(a)", 0.6, 0.3}}};
}

inline Script married() {
  return {{{"spouse", 2}, {"married", 1}},
          {"Robert", "Alice"},
          {{"all x: (exists y: spouse(x, y)) -> married(x)", 0.98, 0.0}, {"spouse(Robert, Alice)", 0.7, 0.0}}};
}

// Tells 1-5 give the state before the penguin fact, all six the state after.
inline Script tweety() {
  return {{{"bird", 1}, {"excp", 1}, {"flier", 1}, {"penguin", 1}},
          {"Tweety", "Cippy"},
          {{"all x: bird(x) & ~excp(x) -> flier(x)", 1.0, 0.0},
           {"all x: ~excp(x)", 0.8, 0.2},
           {"all x: penguin(x) -> bird(x) & ~flier(x)", 1.0, 0.0},
           {"bird(Tweety)", 1.0, 0.0},
           {"bird(Cippy)", 1.0, 0.0},
           {"penguin(Tweety)", 1.0, 0.0}}};
}

}  // namespace fixtures
