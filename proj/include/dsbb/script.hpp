// script.hpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "dsbb/atms.hpp"
#include "dsbb/belief_base.hpp"
#include "dsbb/error.hpp"

namespace dsbb {

enum class Engine { Semantic, Atms, Both };
enum class OutputFormat { Text, Json };

const char* to_string(Engine engine);

struct SessionOptions {
  Engine engine = Engine::Semantic;
  OutputFormat format = OutputFormat::Text;
};

// The two engines disagree on an Ask by more than kMassTolerance.
class EngineDivergence : public Error {
 public:
  using Error::Error;
};

// Exit codes of run_script.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitConflict = 2;
inline constexpr int kExitDivergence = 3;

// Statement interpreter shared by scripts and the REPL.
//
//   backend prop|clausal|frame
//   atoms a b c          (prop)
//   constants A B        (clausal)
//   frame a b c          (frame)
//   tell <x_t> <x_f> <sentence>
//   ask <sentence>
//   show
//   reset
//   # comment
//
// Atoms, predicates and constants a statement mentions for the first time are
// added to the vocabulary; the Tells so far are then replayed over the wider
// backend.
class Session {
 public:
  // Without `default_backend` the first statement must declare one.
  Session(SessionOptions options, std::ostream& out, std::optional<BackendKind> default_backend = std::nullopt);

  // Throws Error subclasses (TotalConflict, EngineDivergence, ParseError, ...)
  // and leaves the session unchanged when a statement fails.
  void execute(std::string_view statement);

  // Adds the symbols `sentence` mentions to the vocabulary without telling it.
  void harvest(std::string_view sentence) { widen(sentence); }

  bool has_backend() const { return kind_.has_value(); }

 private:
  void declare_backend(std::string_view name);
  void install(BackendPtr backend);
  void widen(std::string_view sentence);
  void tell(std::string_view args);
  void ask(std::string_view sentence);
  void show();
  void reset();
  const BackendPtr& backend() const;

  SessionOptions options_;
  std::ostream& out_;
  std::optional<BackendKind> kind_;
  bool backend_locked_ = false;
  std::optional<BeliefBase> semantic_;
  std::optional<AtmsBeliefBase> atms_;
};

// Runs a whole script. Before the first tell or ask, the symbols of every
// sentence in the script are harvested, so the world universe stays fixed
// from the first Tell on. Diagnostics go to `err` as `error at line N: ...`,
// `total conflict at line N` or `engine divergence at line N: ...`.
int run_script(std::string_view text, const SessionOptions& options, std::ostream& out, std::ostream& err);

// Reads statements until end of input; a failing statement is reported on
// `err` and the session continues. The session starts on the clausal backend.
void repl(std::istream& in, std::ostream& out, std::ostream& err, const SessionOptions& options, bool prompt);

// `%.9f` with negative zero printed as zero.
std::string format_number(double x);

}  // namespace dsbb
