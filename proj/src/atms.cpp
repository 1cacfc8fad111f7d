// atms.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include "dsbb/atms.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "dsbb/error.hpp"

namespace dsbb {

Env Env::of(std::initializer_list<std::size_t> members) {
  Env e;
  for (auto a : members) e.insert(a);
  return e;
}

void Env::insert(std::size_t a) {
  if (words_.size() <= a / 64) words_.resize(a / 64 + 1, 0);
  words_[a / 64] |= std::uint64_t{1} << (a % 64);
}

void Env::erase(std::size_t a) {
  if (a / 64 >= words_.size()) return;
  words_[a / 64] &= ~(std::uint64_t{1} << (a % 64));
  trim();
}

bool Env::contains(std::size_t a) const {
  return a / 64 < words_.size() && ((words_[a / 64] >> (a % 64)) & 1U) != 0;
}

std::size_t Env::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Env::subset_of(const Env& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

Env Env::unite(const Env& other) const {
  Env out = words_.size() >= other.words_.size() ? *this : other;
  const Env& small = words_.size() >= other.words_.size() ? other : *this;
  for (std::size_t i = 0; i < small.words_.size(); ++i) out.words_[i] |= small.words_[i];
  return out;
}

std::vector<std::size_t> Env::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Env& a, const Env& b) {
  return a.members() <=> b.members();
}

void Env::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void minimize(Label& label) {
  std::sort(label.begin(), label.end(), [](const Env& a, const Env& b) { return a.count() < b.count(); });
  Label out;
  for (auto& e : label) {
    if (std::none_of(out.begin(), out.end(), [&](const Env& s) { return s.subset_of(e); })) out.push_back(std::move(e));
  }
  label = std::move(out);
}

Atms::Atms() { nodes_.push_back({"false", {}, {}}); }

Atms::NodeId Atms::add_node(std::string name) {
  nodes_.push_back({std::move(name), {}, {}});
  return nodes_.size() - 1;
}

Atms::NodeId Atms::add_assumption(std::string name) {
  const NodeId n = add_node(std::move(name));
  const std::size_t a = assumption_nodes_.size();
  assumption_nodes_.push_back(n);
  Env e;
  e.insert(a);
  update(n, {e});
  return n;
}

bool Atms::add_justification(std::vector<NodeId> antecedents, NodeId consequent) {
  std::sort(antecedents.begin(), antecedents.end());
  antecedents.erase(std::unique(antecedents.begin(), antecedents.end()), antecedents.end());
  if (!seen_.emplace(antecedents, consequent).second) return false;
  const std::size_t j = justifications_.size();
  justifications_.push_back({antecedents, consequent});
  if (std::binary_search(antecedents.begin(), antecedents.end(), consequent)) return true;
  for (NodeId a : antecedents) nodes_[a].consumers.push_back(j);
  Label envs = weave(consequent, {Env{}}, antecedents);
  if (!envs.empty()) update(consequent, std::move(envs));
  return true;
}

bool Atms::consistent(const Env& e) const {
  return std::none_of(nogoods_.begin(), nogoods_.end(), [&](const Env& n) { return n.subset_of(e); });
}

Label Atms::weave(NodeId skip, Label envs, const std::vector<NodeId>& antecedents) const {
  for (NodeId h : antecedents) {
    if (h == skip) continue;
    Label next;
    for (const auto& e : envs) {
      for (const auto& f : nodes_[h].label) {
        Env u = e.unite(f);
        if (consistent(u)) next.push_back(std::move(u));
      }
    }
    minimize(next);
    if (next.empty()) return {};
    envs = std::move(next);
  }
  return envs;
}

void Atms::update(NodeId n, Label envs) {
  std::deque<std::pair<NodeId, Label>> queue;
  queue.emplace_back(n, std::move(envs));
  while (!queue.empty()) {
    auto [node, in] = std::move(queue.front());
    queue.pop_front();
    minimize(in);
    if (node == falsum()) {
      for (const auto& e : in) add_nogood(e);
      continue;
    }
    Label& label = nodes_[node].label;
    Label added;
    for (auto& e : in) {
      if (!consistent(e)) continue;
      if (std::any_of(label.begin(), label.end(), [&](const Env& l) { return l.subset_of(e); })) continue;
      std::erase_if(label, [&](const Env& l) { return e.subset_of(l); });
      label.push_back(e);
      added.push_back(std::move(e));
    }
    if (added.empty()) continue;
    for (std::size_t j : nodes_[node].consumers) {
      const auto& just = justifications_[j];
      Label out = weave(node, added, just.antecedents);
      if (!out.empty()) queue.emplace_back(just.consequent, std::move(out));
    }
  }
}

void Atms::add_nogood(const Env& e) {
  if (!consistent(e)) return;
  std::erase_if(nogoods_, [&](const Env& n) { return e.subset_of(n); });
  nogoods_.push_back(e);
  for (auto& node : nodes_) {
    std::erase_if(node.label, [&](const Env& l) { return e.subset_of(l); });
  }
}

std::string Atms::format(const Env& e) const {
  std::string out = "{";
  bool first = true;
  for (auto a : e.members()) {
    if (!first) out += ',';
    out += assumption_name(a);
    first = false;
  }
  return out + "}";
}

std::string Atms::format(const Label& l) const {
  Label sorted = l;
  std::sort(sorted.begin(), sorted.end());
  std::string out = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) out += ',';
    out += format(sorted[i]);
  }
  return out + "}";
}

std::string Atms::dump() const {
  std::vector<NodeId> order(nodes_.size() - 1);
  std::iota(order.begin(), order.end(), NodeId{1});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return nodes_[a].name < nodes_[b].name; });
  std::string out;
  for (NodeId n : order) out += "node " + nodes_[n].name + ": label = " + format(nodes_[n].label) + "\n";
  out += "nogoods = " + format(nogoods_) + "\n";
  return out;
}

namespace {

// Probabilities of the three choices of each tell.
struct Weights {
  std::vector<TellWeights> tells;

  double choice(std::size_t tell, int branch) const {
    const auto& w = tells[tell];
    if (branch == 0) return w.x_t;
    if (branch == 1) return w.x_f;
    return std::max(0.0, 1.0 - w.x_t - w.x_f);
  }
};

// Environments of `in` still coverable once tell i takes `branch` (0: its
// first assumption, 1: its second, 2: neither), with tell i's bits removed.
Label restrict(const Label& in, std::size_t tell, int branch) {
  const std::size_t a = 2 * tell;
  const std::size_t abar = a + 1;
  Label out;
  for (const auto& e : in) {
    const bool has_a = e.contains(a);
    const bool has_abar = e.contains(abar);
    if ((has_a && branch != 0) || (has_abar && branch != 1)) continue;
    Env r = e;
    r.erase(a);
    r.erase(abar);
    out.push_back(std::move(r));
  }
  minimize(out);
  return out;
}

bool holds_empty(const Label& l) {
  return std::any_of(l.begin(), l.end(), [](const Env& e) { return e.empty(); });
}

std::size_t first_tell(const Label& a, const Label& b) {
  std::size_t best = SIZE_MAX;
  for (const Label* l : {&a, &b}) {
    for (const auto& e : *l) {
      const auto m = e.members();
      if (!m.empty()) best = std::min(best, m.front() / 2);
    }
  }
  return best;
}

double prob_covered(const Label& cover, const Label& avoid, const Weights& w);

double prob_uncovered(const Label& avoid, const Weights& w) { return 1.0 - prob_covered(avoid, {}, w); }

// P(a configuration covers some environment of `cover` and none of `avoid`),
// by expansion on one tell at a time so that the branches are disjoint.
double prob_covered(const Label& cover, const Label& avoid, const Weights& w) {
  if (cover.empty() || holds_empty(avoid)) return 0.0;
  if (holds_empty(cover)) return avoid.empty() ? 1.0 : prob_uncovered(avoid, w);
  const std::size_t tell = first_tell(cover, avoid);
  double total = 0.0;
  for (int branch = 0; branch < 3; ++branch) {
    const double p = w.choice(tell, branch);
    if (p <= 0.0) continue;
    total += p * prob_covered(restrict(cover, tell, branch), restrict(avoid, tell, branch), w);
  }
  return total;
}

Weights weights_of(const std::vector<TellRecord>& trace) {
  Weights w;
  for (const auto& t : trace) w.tells.push_back(t.weights);
  return w;
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

AtmsBeliefBase::AtmsBeliefBase(BackendPtr backend) : backend_(std::move(backend)) {
  for (const auto& premise : backend_->premises()) {
    for (const auto& c : clausify(*premise, atoms_)) atms_.add_justification({}, clause_node(c));
  }
  saturate();
}

Atms::NodeId AtmsBeliefBase::clause_node(const Clause& c) {
  if (c.empty()) return atms_.falsum();
  auto it = clause_nodes_.find(c);
  if (it != clause_nodes_.end()) return it->second;
  const Atms::NodeId n = atms_.add_node(clause_string(c, atoms_));
  clause_nodes_.emplace(c, n);
  pending_.push_back(c);
  return n;
}

// The node standing for a told sentence: its clause when it has exactly one,
// otherwise a node of its own that justifies each clause.
Atms::NodeId AtmsBeliefBase::sentence_node(const FormulaPtr& f) {
  const auto clauses = clausify(*f, atoms_);
  if (clauses.size() == 1) return clause_node(clauses.front());
  const std::string name = "[" + to_string(*f) + "]";
  auto it = sentence_nodes_.find(name);
  if (it != sentence_nodes_.end()) return it->second;
  const Atms::NodeId n = atms_.add_node(name);
  sentence_nodes_.emplace(name, n);
  for (const auto& c : clauses) atms_.add_justification({n}, clause_node(c));
  return n;
}

// Given-clause loop: every new clause is resolved against all processed ones.
void AtmsBeliefBase::saturate() {
  while (!pending_.empty()) {
    const Clause given = pending_.front();
    pending_.erase(pending_.begin());
    processed_.push_back(given);
    const Atms::NodeId gn = clause_nodes_.at(given);
    for (std::size_t k = 0; k < processed_.size(); ++k) {
      const Clause other = processed_[k];
      for (Literal lit : given) {
        if (!std::binary_search(other.begin(), other.end(), negate(lit))) continue;
        Clause r = resolve(given, other, lit);
        if (is_tautology(r)) continue;
        atms_.add_justification({gn, clause_nodes_.at(other)}, clause_node(r));
      }
    }
  }
}

AtmsBeliefBase AtmsBeliefBase::tell(std::string_view sentence, TellWeights w) const {
  validate(w);
  const FormulaPtr f = backend_->ground(sentence);
  AtmsBeliefBase out = *this;
  const std::size_t i = out.trace_.size() + 1;
  const Atms::NodeId a = out.atms_.add_assumption("A" + std::to_string(i));
  const Atms::NodeId abar = out.atms_.add_assumption("~A" + std::to_string(i));
  out.atms_.add_justification({a, abar}, out.atms_.falsum());
  if (w.x_t > 0.0) out.atms_.add_justification({a}, out.sentence_node(f));
  if (w.x_f > 0.0) out.atms_.add_justification({abar}, out.sentence_node(Formula::negation(f)));
  out.saturate();
  out.trace_.push_back({std::string(sentence), w});
  const double c = out.conflict();
  if (1.0 - c <= kConflictThreshold) throw TotalConflict(c);
  return out;
}

double AtmsBeliefBase::conflict() const {
  return clamp01(prob_covered(atms_.nogoods(), {}, weights_of(trace_)));
}

std::vector<Clause> AtmsBeliefBase::query_clauses(const FormulaPtr& f) const {
  AtomTable scratch = atoms_;
  return clausify(*f, scratch);
}

double AtmsBeliefBase::bel(const std::vector<Clause>& query) const {
  Label label{Env{}};
  for (const auto& q : query) {
    Label support;
    for (const auto& [c, node] : clause_nodes_) {
      if (subsumes(c, q)) support.insert(support.end(), atms_.label(node).begin(), atms_.label(node).end());
    }
    Label next;
    for (const auto& e : label) {
      for (const auto& s : support) {
        Env u = e.unite(s);
        if (atms_.consistent(u)) next.push_back(std::move(u));
      }
    }
    minimize(next);
    label = std::move(next);
    if (label.empty()) return 0.0;
  }
  const Weights w = weights_of(trace_);
  const double norm = prob_uncovered(atms_.nogoods(), w);
  if (norm <= kConflictThreshold) throw TotalConflict(1.0 - norm);
  return clamp01(prob_covered(label, atms_.nogoods(), w) / norm);
}

BeliefPair AtmsBeliefBase::ask(std::string_view sentence) const {
  const FormulaPtr f = backend_->ground(sentence);
  return {bel(query_clauses(f)), bel(query_clauses(Formula::negation(f)))};
}

double AtmsBeliefBase::bel_by_enumeration(const std::vector<Clause>& query) const {
  const std::size_t n = trace_.size();
  if (n > kMaxOracleTells) {
    throw TooManyTells(std::to_string(n) + " tells exceed the enumeration limit of " + std::to_string(kMaxOracleTells));
  }
  std::vector<std::vector<Atms::NodeId>> witnesses;
  for (const auto& q : query) {
    std::vector<Atms::NodeId> nodes;
    for (const auto& [c, node] : clause_nodes_) {
      if (subsumes(c, q)) nodes.push_back(node);
    }
    witnesses.push_back(std::move(nodes));
  }

  const auto& justs = atms_.justifications();
  std::vector<std::vector<std::size_t>> consumers(atms_.node_count());
  for (std::size_t j = 0; j < justs.size(); ++j) {
    for (auto a : justs[j].antecedents) consumers[a].push_back(j);
  }

  const Weights w = weights_of(trace_);
  std::size_t configs = 1;
  for (std::size_t i = 0; i < n; ++i) configs *= 3;

  double consistent_mass = 0.0;
  double hit_mass = 0.0;
  std::vector<int> choice(n, 0);
  std::vector<char> derived(atms_.node_count());
  std::vector<std::size_t> missing(justs.size());
  std::vector<Atms::NodeId> stack;
  for (std::size_t k = 0; k < configs; ++k) {
    std::size_t code = k;
    double p = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      choice[i] = static_cast<int>(code % 3);
      code /= 3;
      p *= w.choice(i, choice[i]);
    }
    if (p <= 0.0) continue;

    std::fill(derived.begin(), derived.end(), 0);
    stack.clear();
    auto derive = [&](Atms::NodeId node) {
      if (!derived[node]) {
        derived[node] = 1;
        stack.push_back(node);
      }
    };
    for (std::size_t j = 0; j < justs.size(); ++j) {
      missing[j] = justs[j].antecedents.size();
      if (missing[j] == 0) derive(justs[j].consequent);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (choice[i] < 2) derive(atms_.assumption_node(2 * i + static_cast<std::size_t>(choice[i])));
    }
    while (!stack.empty()) {
      const Atms::NodeId node = stack.back();
      stack.pop_back();
      for (auto j : consumers[node]) {
        if (--missing[j] == 0) derive(justs[j].consequent);
      }
    }

    if (derived[atms_.falsum()]) continue;
    consistent_mass += p;
    const bool entailed = std::all_of(witnesses.begin(), witnesses.end(), [&](const auto& nodes) {
      return std::any_of(nodes.begin(), nodes.end(), [&](Atms::NodeId x) { return derived[x] != 0; });
    });
    if (entailed) hit_mass += p;
  }
  if (consistent_mass <= kConflictThreshold) throw TotalConflict(1.0 - consistent_mass);
  return clamp01(hit_mass / consistent_mass);
}

BeliefPair AtmsBeliefBase::ask_by_enumeration(std::string_view sentence) const {
  const FormulaPtr f = backend_->ground(sentence);
  return {bel_by_enumeration(query_clauses(f)), bel_by_enumeration(query_clauses(Formula::negation(f)))};
}

AtmsBeliefBase AtmsBeliefBase::replay(BackendPtr backend) const {
  AtmsBeliefBase out(std::move(backend));
  for (const auto& t : trace_) out = out.tell(t.sentence, t.weights);
  return out;
}

}  // namespace dsbb
