// atms.hpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dsbb/belief_base.hpp"
#include "dsbb/clauses.hpp"

namespace dsbb {

// A set of assumption indices.
class Env {
 public:
  Env() = default;
  static Env of(std::initializer_list<std::size_t> members);

  void insert(std::size_t a);
  void erase(std::size_t a);
  bool contains(std::size_t a) const;
  bool empty() const { return words_.empty(); }
  std::size_t count() const;
  bool subset_of(const Env& other) const;
  Env unite(const Env& other) const;
  std::vector<std::size_t> members() const;

  friend bool operator==(const Env&, const Env&) = default;
  friend std::strong_ordering operator<=>(const Env& a, const Env& b);

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

using Label = std::vector<Env>;

// Removes environments that contain another member of the set, and duplicates.
void minimize(Label& label);

// Assumption-based truth maintenance: every node carries the minimal,
// consistent environments from which the justifications derive it.
class Atms {
 public:
  using NodeId = std::size_t;

  struct Justification {
    std::vector<NodeId> antecedents;
    NodeId consequent;
  };

  Atms();

  NodeId falsum() const { return 0; }
  NodeId add_node(std::string name);
  // A node whose label is {{a}} for a fresh assumption index a.
  NodeId add_assumption(std::string name);

  // Returns false if the same justification is already present. A justification
  // with no antecedents makes its consequent hold in the empty environment.
  bool add_justification(std::vector<NodeId> antecedents, NodeId consequent);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t assumption_count() const { return assumption_nodes_.size(); }
  NodeId assumption_node(std::size_t a) const { return assumption_nodes_[a]; }
  const std::string& name(NodeId n) const { return nodes_[n].name; }
  const std::string& assumption_name(std::size_t a) const { return nodes_[assumption_nodes_[a]].name; }

  const Label& label(NodeId n) const { return nodes_[n].label; }
  const Label& nogoods() const { return nogoods_; }
  const std::vector<Justification>& justifications() const { return justifications_; }

  bool consistent(const Env& e) const;

  std::string format(const Env& e) const;
  std::string format(const Label& l) const;

  // `node <name>: label = {...}` for every node, sorted by name, then the
  // nogoods line.
  std::string dump() const;

 private:
  struct Node {
    std::string name;
    Label label;
    std::vector<std::size_t> consumers;
  };

  void update(NodeId n, Label envs);
  Label weave(NodeId skip, Label envs, const std::vector<NodeId>& antecedents) const;
  void add_nogood(const Env& e);

  std::vector<Node> nodes_;
  std::vector<NodeId> assumption_nodes_;
  std::vector<Justification> justifications_;
  std::set<std::pair<std::vector<NodeId>, NodeId>> seen_;
  Label nogoods_;
};

inline constexpr std::size_t kMaxOracleTells = 12;

// The belief base realised on an ATMS. Tell i (0-based) owns the assumptions
// 2i (`A<i+1>`, mass x_t) and 2i+1 (`~A<i+1>`, mass x_f); choosing neither
// has mass 1 - x_t - x_f.
//
// The backend grounds each sentence; its clause form is justified from the
// sentence node and closed under ground resolution, each resolution step being
// a justification. Sides with zero mass are not expanded.
class AtmsBeliefBase {
 public:
  explicit AtmsBeliefBase(BackendPtr backend);

  // Throws TotalConflict, InvalidWeights and the backend's errors.
  AtmsBeliefBase tell(std::string_view sentence, TellWeights w) const;

  // Bel from the labels: the probability that a configuration covers a label
  // environment of the query and no nogood, over the probability that it
  // covers no nogood.
  BeliefPair ask(std::string_view sentence) const;

  // The same quantity by enumerating all 3^n configurations and forward
  // chaining the justifications in each. Throws TooManyTells beyond 12 tells.
  BeliefPair ask_by_enumeration(std::string_view sentence) const;

  // Probability mass of the configurations that cover a nogood.
  double conflict() const;

  AtmsBeliefBase replay(BackendPtr backend) const;

  const Atms& atms() const { return atms_; }
  const std::vector<TellRecord>& trace() const { return trace_; }
  const BackendPtr& backend() const { return backend_; }

 private:
  Atms::NodeId clause_node(const Clause& c);
  Atms::NodeId sentence_node(const FormulaPtr& f);
  void saturate();
  std::vector<Clause> query_clauses(const FormulaPtr& f) const;
  double bel(const std::vector<Clause>& query) const;
  double bel_by_enumeration(const std::vector<Clause>& query) const;

  BackendPtr backend_;
  Atms atms_;
  AtomTable atoms_;
  std::map<Clause, Atms::NodeId> clause_nodes_;
  std::map<std::string, Atms::NodeId> sentence_nodes_;
  std::vector<Clause> processed_;
  std::vector<Clause> pending_;
  std::vector<TellRecord> trace_;
};

}  // namespace dsbb
