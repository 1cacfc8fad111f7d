// belief_base.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include "dsbb/belief_base.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <type_traits>

#include "dsbb/error.hpp"

namespace dsbb {

const char* to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::Propositional: return "prop";
    case BackendKind::Clausal: return "clausal";
    case BackendKind::Frame: return "frame";
  }
  return "?";
}

Proposition PropBackend::meaning(std::string_view sentence) const {
  return dsbb::meaning(sig_, *parse_formula(sentence, Dialect::Propositional));
}

FormulaPtr PropBackend::ground(std::string_view sentence) const {
  auto f = parse_formula(sentence, Dialect::Propositional);
  for (const auto& name : atom_names(*f)) {
    if (!sig_.index_of(name)) throw SignatureError(SignatureError::Kind::UnknownAtom, "unknown atom '" + name + "'");
  }
  return f;
}

BackendPtr PropBackend::widen(std::string_view sentence) const {
  if (!harvest_) return nullptr;
  auto atoms = sig_.atoms();
  for (auto& name : atom_names(*parse_formula(sentence, Dialect::Propositional))) {
    if (!sig_.index_of(name) && std::find(atoms.begin(), atoms.end(), name) == atoms.end()) atoms.push_back(name);
  }
  if (atoms.size() == sig_.atoms().size()) return nullptr;
  return std::make_shared<PropBackend>(PropSignature(std::move(atoms), kDefaultMaxAtoms, 0), harvest_);
}

Proposition ClausalBackend::meaning(std::string_view sentence) const {
  return meaning_cl(sig_, *parse_clausal(sentence));
}

FormulaPtr ClausalBackend::ground(std::string_view sentence) const { return dsbb::ground(sig_, *parse_clausal(sentence)); }

BackendPtr ClausalBackend::widen(std::string_view sentence) const {
  if (!harvest_) return nullptr;
  auto f = parse_clausal(sentence);
  classify(*f);
  auto wider = extend(sig_, harvest(*f));
  if (!wider) return nullptr;
  return std::make_shared<ClausalBackend>(std::move(*wider), harvest_);
}

Proposition FrameBackend::meaning(std::string_view sentence) const {
  return frame_meaning(frame_, parse_frame_subset(sentence));
}

FormulaPtr FrameBackend::ground(std::string_view sentence) const {
  std::vector<FormulaPtr> parts;
  for (const auto& e : parse_frame_subset(sentence)) {
    if (!frame_.index_of(e)) throw SignatureError(SignatureError::Kind::UnknownElement, "unknown frame element '" + e + "'");
    parts.push_back(Formula::atom(e));
  }
  return fold(Op::Or, parts, false);
}

std::vector<FormulaPtr> FrameBackend::premises() const {
  const auto& el = frame_.elements();
  std::vector<FormulaPtr> out;
  std::vector<FormulaPtr> atoms;
  for (const auto& e : el) atoms.push_back(Formula::atom(e));
  out.push_back(fold(Op::Or, atoms, false));
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      out.push_back(Formula::negation(Formula::binary(Op::And, atoms[i], atoms[j])));
    }
  }
  return out;
}

void validate(const TellWeights& w) {
  if (!std::isfinite(w.x_t) || !std::isfinite(w.x_f) || w.x_t < 0.0 || w.x_f < 0.0 || w.x_t + w.x_f > 1.0 + 1e-12) {
    throw InvalidWeights("weights must satisfy x_t >= 0, x_f >= 0 and x_t + x_f <= 1");
  }
}

BeliefBase BeliefBase::empty(BackendPtr backend) {
  auto u = backend->universe();
  return BeliefBase(std::move(backend), Bpa::vacuous(std::move(u)), {});
}

BeliefBase BeliefBase::tell(std::string_view sentence, TellWeights w) const {
  validate(w);
  const Proposition yes = backend_->meaning(sentence);
  const Proposition no = complement(yes);
  const double slack = std::max(0.0, 1.0 - w.x_t - w.x_f);
  const std::array<Focal, 3> evidence{Focal{yes, w.x_t}, Focal{no, w.x_f}, Focal{Proposition::top(yes.universe()), slack}};
  auto trace = trace_;
  trace.push_back(TellRecord{std::string(sentence), w});
  return BeliefBase(backend_, combine(state_, evidence), std::move(trace));
}

BeliefPair BeliefBase::ask(std::string_view sentence) const {
  const Proposition q = backend_->meaning(sentence);
  return {bel(state_, q), bel(state_, complement(q))};
}

BeliefBase BeliefBase::absorb(const Bpa& evidence) const {
  auto trace = trace_;
  trace.push_back(EvidenceRecord{evidence});
  return BeliefBase(backend_, combine(state_, evidence), std::move(trace));
}

BeliefBase BeliefBase::replay(BackendPtr backend) const {
  auto out = empty(std::move(backend));
  for (const auto& entry : trace_) {
    std::visit(
        [&](const auto& rec) {
          using T = std::decay_t<decltype(rec)>;
          if constexpr (std::is_same_v<T, TellRecord>) {
            out = out.tell(rec.sentence, rec.weights);
          } else {
            out = out.absorb(rec.evidence);
          }
        },
        entry);
  }
  return out;
}

BeliefBase embed_ds_model(const Frame& frame, const std::vector<FrameBpa>& bpas) {
  auto base = BeliefBase::empty(std::make_shared<FrameBackend>(frame));
  for (const auto& m : bpas) {
    std::vector<Focal> focals;
    focals.reserve(m.size());
    for (const auto& [subset, mass] : m) focals.push_back({frame_meaning(frame, subset), mass});
    base = base.absorb(Bpa::from_focals(frame.universe(), focals));
  }
  return base;
}

}  // namespace dsbb
