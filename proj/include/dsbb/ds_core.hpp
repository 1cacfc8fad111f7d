// ds_core.hpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "dsbb/propositions.hpp"

namespace dsbb {

inline constexpr double kMassTolerance = 1e-9;
inline constexpr double kPruneThreshold = 1e-12;
inline constexpr double kConflictThreshold = 1e-12;

struct Focal {
  Proposition proposition;
  double mass;
};

// A basic probability assignment over the propositions of one universe.
//
// Invariants: masses are in (kPruneThreshold, 1], sum to 1 within kMassTolerance,
// and no focal element is the empty proposition. Keys are canonical bitsets, so
// focal elements that denote the same set of worlds are always merged.
class Bpa {
 public:
  // All mass on the tautology.
  static Bpa vacuous(UniversePtr universe);

  // Merges duplicate propositions. Throws InvalidBpa on an empty focal element,
  // a negative mass or a total different from 1, and UniverseMismatch on mixed
  // universes.
  static Bpa from_focals(UniversePtr universe, std::span<const Focal> focals);

  const UniversePtr& universe() const { return universe_; }
  const std::map<Proposition, double>& focals() const { return focals_; }
  std::size_t size() const { return focals_.size(); }
  double mass(const Proposition& p) const;
  double total_mass() const;

 private:
  Bpa(UniversePtr universe, std::map<Proposition, double> focals)
      : universe_(std::move(universe)), focals_(std::move(focals)) {}

  friend Bpa combine(const Bpa& base, std::span<const Focal> evidence);

  UniversePtr universe_;
  std::map<Proposition, double> focals_;
};

// Degrees of belief in a sentence and in its negation.
struct BeliefPair {
  double bel_true = 0.0;
  double bel_false = 0.0;
};

// Sum of the masses of the focal elements that entail q.
double bel(const Bpa& k, const Proposition& q);

// Dempster's rule. The two bodies of evidence must be distinct; that is the
// caller's obligation and is not (cannot be) checked here.
// Throws TotalConflict when the normalisation constant is <= kConflictThreshold.
Bpa combine(const Bpa& k1, const Bpa& k2);

// Dempster's rule against a raw mass list. Unlike a Bpa, `evidence` may carry mass
// on the empty proposition (it is counted as conflict) and may repeat
// propositions. Masses must be non-negative and sum to 1.
Bpa combine(const Bpa& base, std::span<const Focal> evidence);

// Mass that the combination of k1 and k2 would assign to the empty proposition.
double conflict(const Bpa& k1, const Bpa& k2);

}  // namespace dsbb
