// script.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include "dsbb/script.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace dsbb {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

// Splits off the first whitespace-delimited word.
std::pair<std::string_view, std::string_view> split_word(std::string_view s) {
  s = trim(s);
  const auto end = s.find_first_of(" \t");
  if (end == std::string_view::npos) return {s, {}};
  return {s.substr(0, end), trim(s.substr(end))};
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  for (;;) {
    auto [w, rest] = split_word(s);
    if (w.empty()) return out;
    out.emplace_back(w);
    s = rest;
  }
}

double parse_weight(std::string_view token) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error("invalid number '" + std::string(token) + "'");
  }
  return value;
}

double rounded(double x) { return std::stod(format_number(x)); }

BackendPtr fresh_backend(BackendKind kind) {
  switch (kind) {
    case BackendKind::Propositional:
      return std::make_shared<PropBackend>(PropSignature({}, kDefaultMaxAtoms, 0), true);
    case BackendKind::Clausal:
      return std::make_shared<ClausalBackend>(ClausalSignature({}, {}), true);
    case BackendKind::Frame: break;
  }
  return nullptr;
}

}  // namespace

const char* to_string(Engine engine) {
  switch (engine) {
    case Engine::Semantic: return "semantic";
    case Engine::Atms: return "atms";
    case Engine::Both: return "both";
  }
  return "?";
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  std::string s = buf;
  if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

Session::Session(SessionOptions options, std::ostream& out, std::optional<BackendKind> default_backend)
    : options_(options), out_(out) {
  if (default_backend) {
    kind_ = default_backend;
    install(fresh_backend(*default_backend));
  }
}

const BackendPtr& Session::backend() const {
  if (!kind_) throw Error("expected 'backend prop|clausal|frame' first");
  if (semantic_) return semantic_->backend();
  if (atms_) return atms_->backend();
  throw Error("no frame declared; use 'frame <elements>'");
}

void Session::install(BackendPtr backend) {
  if (!backend) return;
  std::optional<BeliefBase> semantic;
  std::optional<AtmsBeliefBase> atms;
  if (options_.engine != Engine::Atms) {
    semantic = semantic_ ? semantic_->replay(backend) : BeliefBase::empty(backend);
  }
  if (options_.engine != Engine::Semantic) {
    atms = atms_ ? atms_->replay(backend) : AtmsBeliefBase(backend);
  }
  semantic_ = std::move(semantic);
  atms_ = std::move(atms);
}

void Session::widen(std::string_view sentence) {
  if (auto wider = backend()->widen(sentence)) install(std::move(wider));
}

void Session::declare_backend(std::string_view name) {
  BackendKind kind;
  if (name == "prop") {
    kind = BackendKind::Propositional;
  } else if (name == "clausal") {
    kind = BackendKind::Clausal;
  } else if (name == "frame") {
    kind = BackendKind::Frame;
  } else {
    throw Error("unknown backend '" + std::string(name) + "'; expected prop, clausal or frame");
  }
  if (backend_locked_) throw Error("the backend is already declared");
  semantic_.reset();
  atms_.reset();
  kind_ = kind;
  install(fresh_backend(kind));
}

void Session::execute(std::string_view statement) {
  statement = trim(statement.substr(0, statement.find('#')));
  if (statement.empty()) return;
  auto [keyword, rest] = split_word(statement);

  if (keyword == "backend") {
    const auto args = words(rest);
    if (args.size() != 1) throw Error("expected 'backend prop|clausal|frame'");
    const bool script_mode = !kind_ || backend_locked_;
    declare_backend(args.front());
    backend_locked_ = script_mode;
    return;
  }
  if (!kind_) throw Error("expected 'backend prop|clausal|frame' first");

  if (keyword == "atoms") {
    if (*kind_ != BackendKind::Propositional) throw Error("'atoms' needs the prop backend");
    const auto* prop = static_cast<const PropBackend*>(backend().get());
    auto atoms = prop->signature().atoms();
    for (auto& a : words(rest)) {
      if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(std::move(a));
    }
    if (atoms.size() != prop->signature().atoms().size()) {
      install(std::make_shared<PropBackend>(PropSignature(std::move(atoms), kDefaultMaxAtoms, 0), true));
    }
  } else if (keyword == "constants") {
    if (*kind_ != BackendKind::Clausal) throw Error("'constants' needs the clausal backend");
    const auto* cl = static_cast<const ClausalBackend*>(backend().get());
    SymbolUsage usage;
    usage.constants = words(rest);
    if (auto wider = extend(cl->signature(), usage)) install(std::make_shared<ClausalBackend>(std::move(*wider), true));
  } else if (keyword == "frame") {
    if (*kind_ != BackendKind::Frame) throw Error("'frame' needs the frame backend");
    if (semantic_ || atms_) throw Error("the frame is already declared");
    install(std::make_shared<FrameBackend>(Frame(words(rest))));
  } else if (keyword == "tell") {
    tell(rest);
  } else if (keyword == "ask") {
    ask(rest);
  } else if (keyword == "show") {
    if (!rest.empty()) throw Error("'show' takes no arguments");
    show();
  } else if (keyword == "reset") {
    if (!rest.empty()) throw Error("'reset' takes no arguments");
    reset();
  } else {
    throw Error("unknown statement '" + std::string(keyword) + "'");
  }
}

void Session::tell(std::string_view args) {
  auto [t, rest1] = split_word(args);
  auto [f, sentence] = split_word(rest1);
  if (t.empty() || f.empty() || sentence.empty()) throw Error("expected 'tell <x_t> <x_f> <sentence>'");
  const TellWeights w{parse_weight(t), parse_weight(f)};
  validate(w);
  widen(sentence);
  std::optional<BeliefBase> semantic;
  std::optional<AtmsBeliefBase> atms;
  if (semantic_) semantic = semantic_->tell(sentence, w);
  if (atms_) atms = atms_->tell(sentence, w);
  semantic_ = std::move(semantic);
  atms_ = std::move(atms);
}

void Session::ask(std::string_view sentence) {
  if (sentence.empty()) throw Error("expected 'ask <sentence>'");
  widen(sentence);
  BeliefPair result;
  if (semantic_) result = semantic_->ask(sentence);
  if (atms_) {
    const BeliefPair other = atms_->ask(sentence);
    if (semantic_ && (std::abs(result.bel_true - other.bel_true) > kMassTolerance ||
                      std::abs(result.bel_false - other.bel_false) > kMassTolerance)) {
      throw EngineDivergence("semantic <" + format_number(result.bel_true) + ", " + format_number(result.bel_false) +
                             "> but atms <" + format_number(other.bel_true) + ", " +
                             format_number(other.bel_false) + ">");
    }
    if (!semantic_) result = other;
  }
  result.bel_true = std::clamp(result.bel_true, 0.0, 1.0);
  result.bel_false = std::clamp(result.bel_false, 0.0, 1.0);

  if (options_.format == OutputFormat::Json) {
    Json j;
    j["op"] = "ask";
    j["sentence"] = std::string(sentence);
    j["bel_true"] = rounded(result.bel_true);
    j["bel_false"] = rounded(result.bel_false);
    j["engine"] = to_string(options_.engine);
    out_ << j.dump() << '\n';
  } else {
    out_ << "ask " << sentence << " -> bel_true=" << format_number(result.bel_true)
         << " bel_false=" << format_number(result.bel_false) << '\n';
  }
}

void Session::show() {
  backend();
  if (semantic_) {
    std::vector<std::pair<double, std::size_t>> focals;
    for (const auto& [p, m] : semantic_->state().focals()) focals.emplace_back(m, p.count());
    std::stable_sort(focals.begin(), focals.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    if (options_.format == OutputFormat::Json) {
      Json list = Json::array();
      for (const auto& [m, n] : focals) list.push_back(Json{{"mass", rounded(m)}, {"worlds", n}});
      Json j;
      j["op"] = "show";
      j["engine"] = "semantic";
      j["focals"] = std::move(list);
      out_ << j.dump() << '\n';
    } else {
      for (const auto& [m, n] : focals) out_ << "mass " << format_number(m) << ": " << n << " worlds\n";
    }
  }
  if (atms_) {
    const std::string dump = atms_->atms().dump();
    if (options_.format == OutputFormat::Json) {
      Json lines = Json::array();
      std::istringstream in(dump);
      for (std::string line; std::getline(in, line);) lines.push_back(line);
      Json j;
      j["op"] = "show";
      j["engine"] = "atms";
      j["dump"] = std::move(lines);
      out_ << j.dump() << '\n';
    } else {
      out_ << dump;
    }
  }
}

void Session::reset() {
  BackendPtr b = backend();
  semantic_.reset();
  atms_.reset();
  install(std::move(b));
}

namespace {

int report(std::ostream& err, const std::string& where, const std::exception& e) {
  if (dynamic_cast<const TotalConflict*>(&e)) {
    err << "total conflict " << where << '\n';
    return kExitConflict;
  }
  if (dynamic_cast<const EngineDivergence*>(&e)) {
    err << "engine divergence " << where << ": " << e.what() << '\n';
    return kExitDivergence;
  }
  err << "error " << where << ": " << e.what() << '\n';
  return kExitError;
}

}  // namespace

int run_script(std::string_view text, const SessionOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    const auto end = std::min(text.find('\n', start), text.size());
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  std::vector<std::string_view> sentences;
  for (auto line : lines) {
    auto [keyword, rest] = split_word(line.substr(0, line.find('#')));
    if (keyword == "ask") sentences.push_back(rest);
    if (keyword == "tell") sentences.push_back(split_word(split_word(rest).second).second);
  }

  Session session(options, out);
  bool harvested = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      const auto keyword = split_word(lines[i].substr(0, lines[i].find('#'))).first;
      if (!harvested && session.has_backend() && (keyword == "tell" || keyword == "ask")) {
        harvested = true;
        for (auto s : sentences) {
          try {
            session.harvest(s);
          } catch (const Error&) {
            // Reported when the statement itself runs.
          }
        }
      }
      session.execute(lines[i]);
    } catch (const std::exception& e) {
      return report(err, "at line " + std::to_string(i + 1), e);
    }
  }
  return kExitOk;
}

void repl(std::istream& in, std::ostream& out, std::ostream& err, const SessionOptions& options, bool prompt) {
  Session session(options, out, BackendKind::Clausal);
  std::size_t line_no = 0;
  for (;;) {
    if (prompt) out << "dsbb> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) break;
    ++line_no;
    try {
      session.execute(line);
    } catch (const std::exception& e) {
      report(err, "at line " + std::to_string(line_no), e);
    }
    out << std::flush;
  }
  if (prompt) out << '\n';
}

}  // namespace dsbb
