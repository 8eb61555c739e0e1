#include "nfai/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace nfai {

namespace text {

std::vector<Line> tokenize(std::string_view text, std::size_t first_line) {
  std::vector<Line> lines;
  std::size_t number = first_line;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])) != 0) ++i;
      const std::size_t start = i;
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])) == 0) ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    ++number;
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::vector<std::vector<Line>> split_blocks(const std::vector<Line>& lines) {
  std::vector<std::vector<Line>> blocks(1);
  for (const auto& line : lines) {
    if (line.tokens.size() == 1 && line.tokens[0] == "---") {
      blocks.emplace_back();
    } else {
      blocks.back().push_back(line);
    }
  }
  return blocks;
}

std::size_t parse_index(const Line& line, const std::string& token) {
  std::size_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line.number, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

}  // namespace text

namespace {

using text::Line;

enum class Header { nfa, enfa, dfa };

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity) {
    throw ParseError(line.number, "'" + line.tokens[0] + "' expects " +
                                      std::to_string(arity - 1) + " argument(s)");
  }
}

AnyAutomaton parse_block(const std::vector<Line>& lines, std::size_t fallback_line) {
  if (lines.empty()) throw ParseError(fallback_line, "empty automaton block");

  const Line& head = lines.front();
  Header header{};
  if (head.tokens.size() != 1) throw ParseError(head.number, "header takes no arguments");
  if (head.tokens[0] == "nfa") {
    header = Header::nfa;
  } else if (head.tokens[0] == "enfa") {
    header = Header::enfa;
  } else if (head.tokens[0] == "dfa") {
    header = Header::dfa;
  } else {
    throw ParseError(head.number, "unknown header '" + head.tokens[0] +
                                      "' (expected nfa, enfa or dfa)");
  }

  std::optional<std::size_t> n_states;
  std::optional<std::size_t> alphabet;
  std::optional<State> initial;
  std::vector<State> finals;
  std::vector<Transition> transitions;
  std::vector<std::string> names;

  auto require_states = [&](const Line& line) {
    if (!n_states) throw ParseError(line.number, "'states' must precede '" + line.tokens[0] + "'");
    return *n_states;
  };
  auto state_token = [&](const Line& line, const std::string& token) {
    const std::size_t q = text::parse_index(line, token);
    if (q >= require_states(line)) {
      throw ParseError(line.number, "state " + token + " out of range [0, " +
                                        std::to_string(*n_states) + ")");
    }
    return static_cast<State>(q);
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.tokens[0];
    if (key == "states") {
      expect_arity(line, 2);
      n_states = text::parse_index(line, line.tokens[1]);
      if (*n_states == 0) throw ParseError(line.number, "an automaton needs at least one state");
    } else if (key == "alphabet") {
      // "alphabet <n>" optionally followed by an annotation such as "tagged k=<k>".
      if (line.tokens.size() < 2) throw ParseError(line.number, "'alphabet' expects a size");
      alphabet = text::parse_index(line, line.tokens[1]);
    } else if (key == "letters") {
      names.assign(line.tokens.begin() + 1, line.tokens.end());
    } else if (key == "initial") {
      expect_arity(line, 2);
      initial = state_token(line, line.tokens[1]);
    } else if (key == "final") {
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        finals.push_back(state_token(line, line.tokens[t]));
      }
    } else if (key == "trans") {
      expect_arity(line, 4);
      if (!alphabet) throw ParseError(line.number, "'alphabet' must precede 'trans'");
      const State src = state_token(line, line.tokens[1]);
      Label label = kEpsilon;
      if (line.tokens[2] == "-") {
        if (header != Header::enfa) {
          throw ParseError(line.number, "epsilon transition outside an enfa block");
        }
      } else {
        label = static_cast<Label>(text::parse_index(line, line.tokens[2]));
        if (label >= *alphabet) {
          throw ParseError(line.number, "letter " + line.tokens[2] + " out of range [0, " +
                                            std::to_string(*alphabet) + ")");
        }
      }
      const State dst = state_token(line, line.tokens[3]);
      transitions.push_back({src, label, dst});
    } else {
      throw ParseError(line.number, "unknown directive '" + key + "'");
    }
  }

  if (!n_states) throw ParseError(head.number, "missing 'states'");
  if (!alphabet) throw ParseError(head.number, "missing 'alphabet'");
  if (!names.empty() && names.size() != *alphabet) {
    throw ParseError(head.number, "letter name table size differs from alphabet size");
  }
  const State init = initial.value_or(0);

  if (header == Header::enfa) {
    EpsilonNfa a(*n_states, *alphabet, init, std::move(finals), std::move(transitions));
    a.set_letter_names(std::move(names));
    return a;
  }
  Nfa a(*n_states, *alphabet, init, std::move(finals), std::move(transitions));
  if (header == Header::dfa && !a.is_deterministic()) {
    throw ParseError(head.number, "dfa block has two transitions for one (state, letter)");
  }
  a.set_letter_names(std::move(names));
  return a;
}

template <bool AllowEpsilon>
std::string serialize_impl(const BasicAutomaton<AllowEpsilon>& a) {
  std::ostringstream out;
  out << (AllowEpsilon ? "enfa" : "nfa") << '\n';
  out << "states " << a.n_states() << '\n';
  out << "alphabet " << a.alphabet_size() << '\n';
  if (!a.letter_names().empty()) {
    out << "letters";
    for (const auto& name : a.letter_names()) out << ' ' << name;
    out << '\n';
  }
  out << "initial " << a.initial() << '\n';
  out << "final";
  for (const State f : a.finals()) out << ' ' << f;
  out << '\n';
  for (const auto& t : a.transitions()) {
    out << "trans " << t.src << ' ';
    if (t.label == kEpsilon) {
      out << '-';
    } else {
      out << t.label;
    }
    out << ' ' << t.dst << '\n';
  }
  return out.str();
}

}  // namespace

AnyAutomaton parse_automaton(std::string_view source) {
  const auto blocks = text::split_blocks(text::tokenize(source));
  if (blocks.size() != 1) {
    throw ParseError(1, "expected one automaton, found " + std::to_string(blocks.size()) +
                            " blocks");
  }
  return parse_block(blocks.front(), 1);
}

Nfa parse_nfa(std::string_view source) {
  auto parsed = parse_automaton(source);
  if (auto* nfa = std::get_if<Nfa>(&parsed)) return std::move(*nfa);
  return to_nfa(std::get<EpsilonNfa>(parsed));
}

std::string serialize_automaton(const Nfa& a) { return serialize_impl(a); }
std::string serialize_automaton(const EpsilonNfa& a) { return serialize_impl(a); }
std::string serialize_automaton(const AnyAutomaton& a) {
  return std::visit([](const auto& x) { return serialize_impl(x); }, a);
}

Bundle parse_bundle(std::string_view source) {
  const auto lines = text::tokenize(source);
  if (lines.empty()) throw ParseError(1, "empty bundle file");
  std::vector<Nfa> automata;
  for (const auto& block : text::split_blocks(lines)) {
    const std::size_t line_no = block.empty() ? lines.back().number : block.front().number;
    auto parsed = parse_block(block, line_no);
    if (auto* nfa = std::get_if<Nfa>(&parsed)) {
      automata.push_back(std::move(*nfa));
    } else {
      throw ParseError(line_no, "bundle components must be epsilon-free (nfa or dfa)");
    }
  }
  try {
    return Bundle(std::move(automata));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(lines.front().number, e.what());
  }
}

std::string serialize_bundle(const std::vector<Nfa>& automata) {
  std::string out;
  for (std::size_t i = 0; i < automata.size(); ++i) {
    if (i > 0) out += "---\n";
    out += serialize_automaton(automata[i]);
  }
  return out;
}

std::string serialize_bundle(const Bundle& bundle) { return serialize_bundle(bundle.automata()); }

}  // namespace nfai
