// ds_core.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include "dsbb/ds_core.hpp"

#include <cmath>
#include <string>

#include "dsbb/error.hpp"

namespace dsbb {

namespace {

void check_universe(const UniversePtr& u, const Proposition& p) {
  if (p.universe()->id() != u->id()) throw UniverseMismatch();
}

std::vector<Focal> as_focals(const Bpa& k) {
  std::vector<Focal> out;
  out.reserve(k.size());
  for (const auto& [p, m] : k.focals()) out.push_back({p, m});
  return out;
}

}  // namespace

Bpa Bpa::vacuous(UniversePtr universe) {
  std::map<Proposition, double> focals;
  focals.emplace(Proposition::top(universe), 1.0);
  return Bpa(std::move(universe), std::move(focals));
}

Bpa Bpa::from_focals(UniversePtr universe, std::span<const Focal> focals) {
  std::map<Proposition, double> merged;
  double total = 0.0;
  for (const auto& f : focals) {
    check_universe(universe, f.proposition);
    if (!(f.mass >= 0.0) || !std::isfinite(f.mass)) throw InvalidBpa("focal mass must be a non-negative number");
    if (f.mass <= kPruneThreshold) continue;
    if (f.proposition.is_empty()) throw InvalidBpa("the empty proposition cannot be a focal element");
    merged[f.proposition] += f.mass;
    total += f.mass;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw InvalidBpa("focal masses sum to " + std::to_string(total) + ", expected 1");
  }
  return Bpa(std::move(universe), std::move(merged));
}

double Bpa::mass(const Proposition& p) const {
  auto it = focals_.find(p);
  return it == focals_.end() ? 0.0 : it->second;
}

double Bpa::total_mass() const {
  double total = 0.0;
  for (const auto& [p, m] : focals_) total += m;
  return total;
}

double bel(const Bpa& k, const Proposition& q) {
  check_universe(k.universe(), q);
  double sum = 0.0;
  for (const auto& [p, m] : k.focals()) {
    if (entails(p, q)) sum += m;
  }
  return sum;
}

Bpa combine(const Bpa& base, std::span<const Focal> evidence) {
  std::map<Proposition, double> products;
  double conflict_mass = 0.0;
  for (const auto& e : evidence) {
    check_universe(base.universe(), e.proposition);
    if (!(e.mass >= 0.0)) throw InvalidBpa("evidence mass must be non-negative");
    if (e.mass == 0.0) continue;
    for (const auto& [p, m] : base.focals()) {
      Proposition q = meet(p, e.proposition);
      const double product = m * e.mass;
      if (q.is_empty()) {
        conflict_mass += product;
      } else {
        products[std::move(q)] += product;
      }
    }
  }

  double kept = 0.0;
  for (const auto& [q, m] : products) kept += m;
  // rho: sum of the non-conflicting products, equal to 1 - conflict_mass for normalised inputs.
  if (kept <= kConflictThreshold) throw TotalConflict(conflict_mass);

  std::map<Proposition, double> out;
  double total = 0.0;
  for (auto& [q, m] : products) {
    const double normalised = m / kept;
    if (normalised <= kPruneThreshold) continue;
    out.emplace(q, normalised);
    total += normalised;
  }
  for (auto& [q, m] : out) m /= total;
  return Bpa(base.universe(), std::move(out));
}

Bpa combine(const Bpa& k1, const Bpa& k2) {
  if (k1.universe()->id() != k2.universe()->id()) throw UniverseMismatch();
  const auto evidence = as_focals(k2);
  return combine(k1, evidence);
}

double conflict(const Bpa& k1, const Bpa& k2) {
  if (k1.universe()->id() != k2.universe()->id()) throw UniverseMismatch();
  double c = 0.0;
  for (const auto& [p, m] : k1.focals()) {
    for (const auto& [q, n] : k2.focals()) {
      bool disjoint = true;
      for (std::size_t i = 0; i < p.words().size() && disjoint; ++i) {
        disjoint = (p.words()[i] & q.words()[i]) == 0;
      }
      if (disjoint) c += m * n;
    }
  }
  return c;
}

}  // namespace dsbb
