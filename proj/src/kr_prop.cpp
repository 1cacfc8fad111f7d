// kr_prop.cpp
// Copyright (c) 2026, The dsbb Authors
// Licensed under the Apache License Version 2.0.

#include "dsbb/kr_prop.hpp"

#include <cctype>
#include <cstdint>

#include "dsbb/error.hpp"

namespace dsbb {

namespace {

// Formula compiled to postfix over atom indices, evaluated 64 worlds at a time.
struct Program {
  enum class Code : std::uint8_t { Atom, True, False, Not, And, Or, Implies, Iff };
  struct Instr {
    Code code;
    std::size_t atom;
  };
  std::vector<Instr> code;
  std::size_t max_depth = 0;
};

void compile(const PropSignature& sig, const Formula& f, Program& prog, std::size_t depth) {
  using Code = Program::Code;
  prog.max_depth = std::max(prog.max_depth, depth + 1);
  switch (f.op()) {
    case Op::True: prog.code.push_back({Code::True, 0}); return;
    case Op::False: prog.code.push_back({Code::False, 0}); return;
    case Op::Atom: {
      const std::string name = f.atom_name();
      auto idx = sig.index_of(name);
      if (!idx) throw SignatureError(SignatureError::Kind::UnknownAtom, "unknown atom '" + name + "'");
      prog.code.push_back({Code::Atom, *idx});
      return;
    }
    case Op::Not:
      compile(sig, *f.lhs(), prog, depth);
      prog.code.push_back({Code::Not, 0});
      return;
    case Op::Forall:
    case Op::Exists:
      throw UnsupportedSentence("quantified formula in the propositional backend");
    default: break;
  }
  compile(sig, *f.lhs(), prog, depth);
  compile(sig, *f.rhs(), prog, depth + 1);
  Code c = Code::And;
  switch (f.op()) {
    case Op::And: c = Code::And; break;
    case Op::Or: c = Code::Or; break;
    case Op::Implies: c = Code::Implies; break;
    default: c = Code::Iff; break;
  }
  prog.code.push_back({c, 0});
}

// Truth values of atom `j` over the 64 worlds of word `k`.
std::uint64_t atom_word(std::size_t j, std::size_t k) {
  static constexpr std::uint64_t kPatterns[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
  };
  if (j < 6) return kPatterns[j];
  return ((k >> (j - 6)) & 1U) ? ~std::uint64_t{0} : 0;
}

std::uint64_t run(const Program& prog, std::size_t k, std::vector<std::uint64_t>& stack) {
  using Code = Program::Code;
  stack.clear();
  for (const auto& ins : prog.code) {
    switch (ins.code) {
      case Code::Atom: stack.push_back(atom_word(ins.atom, k)); break;
      case Code::True: stack.push_back(~std::uint64_t{0}); break;
      case Code::False: stack.push_back(0); break;
      case Code::Not: stack.back() = ~stack.back(); break;
      default: {
        const std::uint64_t b = stack.back();
        stack.pop_back();
        std::uint64_t& a = stack.back();
        switch (ins.code) {
          case Code::And: a &= b; break;
          case Code::Or: a |= b; break;
          case Code::Implies: a = ~a | b; break;
          default: a = ~(a ^ b); break;
        }
      }
    }
  }
  return stack.back();
}

void check_names(const std::vector<std::string>& names, std::unordered_map<std::string, std::size_t>& index,
                 bool (*valid)(std::string_view), const char* what, std::size_t min_count = 1) {
  if (names.size() < min_count) {
    throw SignatureError(SignatureError::Kind::EmptySignature, std::string("at least one ") + what + " is required");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!valid(names[i])) {
      throw SignatureError(SignatureError::Kind::InvalidName, std::string("invalid ") + what + " name '" + names[i] + "'");
    }
    if (!index.emplace(names[i], i).second) {
      throw SignatureError(SignatureError::Kind::DuplicateName, std::string("duplicate ") + what + " '" + names[i] + "'");
    }
  }
}

bool valid_element(std::string_view name) { return is_identifier(name); }

}  // namespace

bool is_atom_name(std::string_view name) {
  const auto open = name.find('(');
  if (open == std::string_view::npos) return is_identifier(name);
  if (!is_identifier(name.substr(0, open)) || name.back() != ')') return false;
  std::string_view args = name.substr(open + 1, name.size() - open - 2);
  std::size_t start = 0;
  for (;;) {
    const auto comma = args.find(',', start);
    if (!is_identifier(args.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start))) {
      return false;
    }
    if (comma == std::string_view::npos) return true;
    start = comma + 1;
  }
}

PropSignature::PropSignature(std::vector<std::string> atoms, std::size_t max_atoms, std::size_t min_atoms)
    : atoms_(std::move(atoms)) {
  check_names(atoms_, index_, &is_atom_name, "atom", min_atoms);
  if (atoms_.size() > max_atoms) {
    throw SignatureError(SignatureError::Kind::TooManyAtoms, std::to_string(atoms_.size()) +
                                                                 " atoms exceed the maximum of " +
                                                                 std::to_string(max_atoms));
  }
  auto names = atoms_;
  universe_ = WorldUniverse::create(
      std::size_t{1} << atoms_.size(),
      [names](std::size_t w) {
        std::string out;
        for (std::size_t j = 0; j < names.size(); ++j) {
          if (j > 0) out += ' ';
          out += names[j] + ((w >> j) & 1U ? "=1" : "=0");
        }
        return out;
      },
      std::max(WorldUniverse::kDefaultMaxWorlds, std::size_t{1} << atoms_.size()));
}

std::optional<std::size_t> PropSignature::index_of(std::string_view atom) const {
  auto it = index_.find(std::string(atom));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const UniversePtr& worlds(const PropSignature& sig) { return sig.universe(); }

Proposition meaning(const PropSignature& sig, const Formula& f) {
  Program prog;
  compile(sig, f, prog, 0);
  const auto& u = sig.universe();
  std::vector<std::uint64_t> words(u->word_count());
  std::vector<std::uint64_t> stack;
  stack.reserve(prog.max_depth + 1);
  for (std::size_t k = 0; k < words.size(); ++k) words[k] = run(prog, k, stack);
  return Proposition::from_words(u, std::move(words));
}

Frame::Frame(std::vector<std::string> elements) : elements_(std::move(elements)) {
  check_names(elements_, index_, &valid_element, "frame element");
  auto names = elements_;
  universe_ = WorldUniverse::create(elements_.size(), [names](std::size_t w) { return names[w]; });
}

std::optional<std::size_t> Frame::index_of(std::string_view element) const {
  auto it = index_.find(std::string(element));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Proposition frame_meaning(const Frame& frame, const std::vector<std::string>& subset) {
  std::vector<std::size_t> worlds;
  worlds.reserve(subset.size());
  for (const auto& e : subset) {
    auto idx = frame.index_of(e);
    if (!idx) throw SignatureError(SignatureError::Kind::UnknownElement, "unknown frame element '" + e + "'");
    worlds.push_back(*idx);
  }
  return Proposition::from_worlds(frame.universe(), worlds);
}

std::vector<std::string> parse_frame_subset(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto ident = [&]() -> std::string {
    const std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    if (start == i || !is_identifier(text.substr(start, i - start))) {
      throw ParseError("expected a frame element", start);
    }
    return std::string(text.substr(start, i - start));
  };

  std::vector<std::string> out;
  skip();
  if (i < text.size() && text[i] != '{') {
    out.push_back(ident());
  } else {
    if (i >= text.size()) throw ParseError("expected '{' or a frame element", i);
    ++i;
    skip();
    if (i < text.size() && text[i] == '}') {
      ++i;
    } else {
      for (;;) {
        skip();
        out.push_back(ident());
        skip();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == '}') {
          ++i;
          break;
        }
        throw ParseError("expected ',' or '}'", i);
      }
    }
  }
  skip();
  if (i != text.size()) throw ParseError("unexpected trailing input", i);
  return out;
}

}  // namespace dsbb
