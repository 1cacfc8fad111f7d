// belief_base.hpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dsbb/ds_core.hpp"
#include "dsbb/formula.hpp"
#include "dsbb/kr_clausal.hpp"
#include "dsbb/kr_prop.hpp"

namespace dsbb {

enum class BackendKind { Propositional, Clausal, Frame };

const char* to_string(BackendKind kind);

// A knowledge-representation system as the belief base sees it: a language, a
// world universe and a meaning function from sentences to propositions.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual BackendKind kind() const = 0;
  virtual const UniversePtr& universe() const = 0;

  // Set of worlds in which the sentence holds.
  virtual Proposition meaning(std::string_view sentence) const = 0;

  // Quantifier-free formula over the backend's atoms with the same meaning.
  virtual FormulaPtr ground(std::string_view sentence) const = 0;

  // Formulas true in every world of the universe that the atom-level view cannot
  // see by itself (the exclusivity of frame elements). Empty for the logics.
  virtual std::vector<FormulaPtr> premises() const { return {}; }

  // A backend whose vocabulary also covers `sentence`, or nullptr when no
  // widening is needed or possible.
  virtual std::shared_ptr<const Backend> widen(std::string_view sentence) const {
    (void)sentence;
    return nullptr;
  }
};

using BackendPtr = std::shared_ptr<const Backend>;

class PropBackend final : public Backend {
 public:
  // With `harvest` set, widen() admits atoms the signature has not seen yet.
  explicit PropBackend(PropSignature sig, bool harvest = false) : sig_(std::move(sig)), harvest_(harvest) {}

  BackendKind kind() const override { return BackendKind::Propositional; }
  const UniversePtr& universe() const override { return sig_.universe(); }
  Proposition meaning(std::string_view sentence) const override;
  FormulaPtr ground(std::string_view sentence) const override;
  BackendPtr widen(std::string_view sentence) const override;

  const PropSignature& signature() const { return sig_; }
  bool harvesting() const { return harvest_; }

 private:
  PropSignature sig_;
  bool harvest_;
};

class ClausalBackend final : public Backend {
 public:
  // With `harvest` set, widen() admits predicates and constants the signature
  // has not seen yet.
  explicit ClausalBackend(ClausalSignature sig, bool harvest = true) : sig_(std::move(sig)), harvest_(harvest) {}

  BackendKind kind() const override { return BackendKind::Clausal; }
  const UniversePtr& universe() const override { return sig_.universe(); }
  Proposition meaning(std::string_view sentence) const override;
  FormulaPtr ground(std::string_view sentence) const override;
  BackendPtr widen(std::string_view sentence) const override;

  const ClausalSignature& signature() const { return sig_; }
  bool harvesting() const { return harvest_; }

 private:
  ClausalSignature sig_;
  bool harvest_;
};

class FrameBackend final : public Backend {
 public:
  explicit FrameBackend(Frame frame) : frame_(std::move(frame)) {}

  BackendKind kind() const override { return BackendKind::Frame; }
  const UniversePtr& universe() const override { return frame_.universe(); }
  Proposition meaning(std::string_view sentence) const override;
  FormulaPtr ground(std::string_view sentence) const override;
  std::vector<FormulaPtr> premises() const override;

  const Frame& frame() const { return frame_; }

 private:
  Frame frame_;
};

struct TellWeights {
  double x_t = 0.0;
  double x_f = 0.0;
};

// Throws InvalidWeights unless x_t, x_f >= 0 and x_t + x_f <= 1 (+1e-12).
void validate(const TellWeights& w);

struct TellRecord {
  std::string sentence;
  TellWeights weights;
};

// Evidence combined directly as a BPA (used to embed DS models).
struct EvidenceRecord {
  Bpa evidence;
};

using TraceEntry = std::variant<TellRecord, EvidenceRecord>;

// Empty / Tell / Ask over a backend. A BeliefBase is an immutable value; tell()
// returns a new one.
//
// Each Tell must bring evidence distinct from what the base already holds. That
// proviso cannot be checked mechanically and is left to the caller.
class BeliefBase {
 public:
  // All mass on the tautology.
  static BeliefBase empty(BackendPtr backend);

  // state' = state (+) { <||s||, x_t>, <||~s||, x_f>, <top, 1 - x_t - x_f> }.
  // Throws TotalConflict, InvalidWeights, ParseError, SignatureError.
  BeliefBase tell(std::string_view sentence, TellWeights w) const;

  // <Bel(||s||), Bel(||~s||)>.
  BeliefPair ask(std::string_view sentence) const;

  // Dempster combination with an arbitrary BPA over the same universe.
  BeliefBase absorb(const Bpa& evidence) const;

  // The same Tell sequence evaluated over `backend` (which must accept every
  // sentence in the trace).
  BeliefBase replay(BackendPtr backend) const;

  const Bpa& state() const { return state_; }
  const std::vector<TraceEntry>& trace() const { return trace_; }
  const BackendPtr& backend() const { return backend_; }

 private:
  BeliefBase(BackendPtr backend, Bpa state, std::vector<TraceEntry> trace)
      : backend_(std::move(backend)), state_(std::move(state)), trace_(std::move(trace)) {}

  BackendPtr backend_;
  Bpa state_;
  std::vector<TraceEntry> trace_;
};

// A BPA on a frame, as (subset of element names, mass) pairs.
using FrameBpa = std::vector<std::pair<std::vector<std::string>, double>>;

// A frame-backed belief base whose Ask on the sentence {A} returns
// <bel_m(A), bel_m(~A)> for m the Dempster combination of `bpas`.
// Throws TotalConflict when the combination is undefined, InvalidBpa or
// SignatureError on malformed input.
BeliefBase embed_ds_model(const Frame& frame, const std::vector<FrameBpa>& bpas);

}  // namespace dsbb
