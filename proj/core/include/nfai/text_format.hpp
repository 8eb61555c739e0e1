#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nfai/automaton.hpp"
#include "nfai/bundle.hpp"

namespace nfai {

/// Syntax or range error in a text file; carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Automaton text format, one automaton per block:
//
//   nfa            # or "enfa" / "dfa"
//   states 5
//   alphabet 3     # letters are 0..2
//   letters a b c  # optional name table
//   initial 0
//   final 2 4
//   trans 0 1 3    # src letter dst; letter "-" is epsilon (enfa only)
//
// Blocks in a bundle file are separated by a line holding only "---".
// '#' starts a comment. Transitions always use letter indices; the name table
// is informational. Duplicate transitions are merged.

/// Parses exactly one automaton. A "dfa" header also checks determinism.
AnyAutomaton parse_automaton(std::string_view text);

/// Parses one automaton and requires it to be epsilon-free.
Nfa parse_nfa(std::string_view text);

std::string serialize_automaton(const Nfa& a);
std::string serialize_automaton(const EpsilonNfa& a);
std::string serialize_automaton(const AnyAutomaton& a);

/// Splits on "---" lines. Line numbers in errors refer to the whole file.
Bundle parse_bundle(std::string_view text);
std::string serialize_bundle(const Bundle& bundle);
std::string serialize_bundle(const std::vector<Nfa>& automata);

namespace text {

/// One logical line of a text file with its comment stripped and its tokens
/// split on whitespace.
struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

/// Tokenizes `text`, dropping blank and comment-only lines.
std::vector<Line> tokenize(std::string_view text, std::size_t first_line = 1);

/// Splits tokenized lines on "---" separators.
std::vector<std::vector<Line>> split_blocks(const std::vector<Line>& lines);

/// Parses a non-negative integer token or throws ParseError.
std::size_t parse_index(const Line& line, const std::string& token);

}  // namespace text

}  // namespace nfai
