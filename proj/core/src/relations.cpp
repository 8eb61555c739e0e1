#include "nfai/relations.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "nfai/decision.hpp"
#include "nfai/text_format.hpp"

namespace nfai {

MultiTapeAutomaton::MultiTapeAutomaton(std::size_t n_states, std::size_t alphabet_size,
                                       std::size_t tapes, State initial, std::vector<State> finals,
                                       std::vector<TapeTransition> transitions)
    : n_states_(n_states),
      alphabet_size_(alphabet_size),
      tapes_(tapes),
      initial_(initial),
      finals_(std::move(finals)),
      transitions_(std::move(transitions)) {
  if (n_states_ == 0) throw InputError("a multi-tape automaton needs at least one state");
  if (tapes_ == 0) throw InputError("a multi-tape automaton needs at least one tape");
  if (initial_ >= n_states_) throw InputError("initial state out of range");
  for (const State f : finals_) {
    if (f >= n_states_) throw InputError("final state out of range");
  }
  for (const auto& t : transitions_) {
    if (t.src >= n_states_ || t.dst >= n_states_) throw InputError("transition state out of range");
    if (t.letter >= alphabet_size_) throw InputError("transition letter out of range");
    if (t.tape >= tapes_) throw InputError("transition tape out of range");
  }
  std::sort(finals_.begin(), finals_.end());
  finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
}

bool MultiTapeAutomaton::is_final(State q) const {
  return std::binary_search(finals_.begin(), finals_.end(), q);
}

bool multitape_accepts(const MultiTapeAutomaton& c, const std::vector<Word>& words) {
  if (words.size() != c.tapes()) {
    throw InputError("expected " + std::to_string(c.tapes()) + " words, got " +
                     std::to_string(words.size()));
  }
  // Configuration = state + head positions, packed mixed-radix.
  std::vector<std::size_t> radix;
  std::size_t configs = c.n_states();
  for (const auto& w : words) {
    radix.push_back(w.size() + 1);
    configs *= w.size() + 1;
  }
  std::vector<std::vector<const TapeTransition*>> out(c.n_states());
  for (const auto& t : c.transitions()) out[t.src].push_back(&t);

  auto pack = [&](State q, const std::vector<std::size_t>& pos) {
    std::size_t code = 0;
    for (std::size_t i = pos.size(); i > 0; --i) code = code * radix[i - 1] + pos[i - 1];
    return code * c.n_states() + q;
  };

  std::vector<char> seen(configs, 0);
  std::vector<std::pair<State, std::vector<std::size_t>>> queue;
  queue.emplace_back(c.initial(), std::vector<std::size_t>(words.size(), 0));
  seen[pack(c.initial(), queue.front().second)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [q, pos] = queue[head];
    bool at_end = c.is_final(q);
    for (std::size_t i = 0; at_end && i < words.size(); ++i) at_end = pos[i] == words[i].size();
    if (at_end) return true;
    for (const TapeTransition* t : out[q]) {
      const std::size_t tape = t->tape;
      if (pos[tape] >= words[tape].size() || words[tape][pos[tape]] != t->letter) continue;
      auto next = pos;
      ++next[tape];
      const std::size_t code = pack(t->dst, next);
      if (seen[code] != 0) continue;
      seen[code] = 1;
      queue.emplace_back(t->dst, std::move(next));
    }
  }
  return false;
}

MultiTapeAutomaton equality_relation(std::size_t k, std::size_t alphabet_size) {
  if (k < 2) throw InputError("equality relation needs k >= 2");
  auto chain = [&](Letter a, std::size_t i) { return static_cast<State>(1 + a * (k - 1) + (i - 1)); };
  std::vector<TapeTransition> ts;
  for (Letter a = 0; a < alphabet_size; ++a) {
    ts.push_back({0, a, 0, chain(a, 1)});
    for (std::size_t i = 1; i + 1 < k; ++i) ts.push_back({chain(a, i), a, i, chain(a, i + 1)});
    ts.push_back({chain(a, k - 1), a, k - 1, 0});
  }
  return {1 + (k - 1) * alphabet_size, alphabet_size, k, 0, {0}, std::move(ts)};
}

RsInstance ie_to_rs(const Bundle& bundle) {
  if (bundle.k() < 3) throw InputError("ie_to_rs needs at least 3 automata");
  const std::size_t k = bundle.k() - 1;
  const std::size_t ell = bundle.alphabet_size();
  const Nfa& last = bundle[k];
  const std::size_t n = last.n_states();
  // Copy (q, a, i) for i in [1, k-1] follows the base copy Q_k.
  auto copy = [&](State q, Letter a, std::size_t i) {
    return static_cast<State>(n + (q * ell + a) * (k - 1) + (i - 1));
  };

  std::vector<TapeTransition> ts;
  for (State q = 0; q < n; ++q) {
    for (Letter a = 0; a < ell; ++a) {
      ts.push_back({q, a, 0, copy(q, a, 1)});
      for (std::size_t i = 1; i + 1 < k; ++i) ts.push_back({copy(q, a, i), a, i, copy(q, a, i + 1)});
    }
  }
  for (const auto& t : last.transitions()) ts.push_back({copy(t.src, t.label, k - 1), t.label, k - 1, t.dst});

  std::vector<Nfa> kept(bundle.automata().begin(), bundle.automata().begin() + static_cast<std::ptrdiff_t>(k));
  return {Bundle(std::move(kept)),
          MultiTapeAutomaton(n + n * ell * (k - 1), ell, k, last.initial(), last.finals(),
                             std::move(ts))};
}

Bundle rs_to_ie(const RsInstance& instance) {
  const Bundle& bundle = instance.automata;
  const MultiTapeAutomaton& c = instance.relation;
  const std::size_t k = bundle.k();
  const std::size_t ell = bundle.alphabet_size();
  if (c.tapes() != k) throw InputError("relation tape count differs from the number of automata");
  if (c.alphabet_size() != ell) throw InputError("relation alphabet differs from the automata");

  std::vector<Nfa> out;
  out.reserve(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    const Nfa& a = bundle[i];
    std::vector<Transition> ts;
    for (const auto& t : a.transitions()) ts.push_back({t.src, tagged_letter(t.label, i, k), t.dst});
    for (State q = 0; q < a.n_states(); ++q) {
      for (Letter x = 0; x < ell; ++x) {
        for (std::size_t j = 0; j < k; ++j) {
          if (j != i) ts.push_back({q, tagged_letter(x, j, k), q});
        }
      }
    }
    out.emplace_back(a.n_states(), ell * k, a.initial(), a.finals(), std::move(ts));
  }
  std::vector<Transition> ts;
  for (const auto& t : c.transitions()) ts.push_back({t.src, tagged_letter(t.letter, t.tape, k), t.dst});
  out.emplace_back(c.n_states(), ell * k, c.initial(), c.finals(), std::move(ts));
  return Bundle(std::move(out));
}

bool decide_rs(const RsInstance& instance) { return !decide_empty(rs_to_ie(instance)).empty; }

MultiTapeAutomaton parse_multitape(std::string_view source) {
  const auto lines = text::tokenize(source);
  if (lines.empty()) throw ParseError(1, "empty multi-tape automaton");
  if (lines.front().tokens != std::vector<std::string>{"mtnfa"}) {
    throw ParseError(lines.front().number, "expected 'mtnfa' header");
  }
  std::optional<std::size_t> tapes;
  std::optional<std::size_t> states;
  std::optional<std::size_t> alphabet;
  State initial = 0;
  std::vector<State> finals;
  std::vector<TapeTransition> ts;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& key = line.tokens[0];
    auto arg = [&](std::size_t idx) { return text::parse_index(line, line.tokens.at(idx)); };
    auto arity = [&](std::size_t n) {
      if (line.tokens.size() != n + 1) {
        throw ParseError(line.number, "'" + key + "' expects " + std::to_string(n) + " argument(s)");
      }
    };
    if (key == "tapes") {
      arity(1);
      tapes = arg(1);
    } else if (key == "states") {
      arity(1);
      states = arg(1);
    } else if (key == "alphabet") {
      arity(1);
      alphabet = arg(1);
    } else if (key == "initial") {
      arity(1);
      initial = static_cast<State>(arg(1));
    } else if (key == "final") {
      for (std::size_t t = 1; t < line.tokens.size(); ++t) finals.push_back(static_cast<State>(arg(t)));
    } else if (key == "trans") {
      arity(4);
      ts.push_back({static_cast<State>(arg(1)), static_cast<Letter>(arg(2)), arg(3),
                    static_cast<State>(arg(4))});
    } else {
      throw ParseError(line.number, "unknown directive '" + key + "'");
    }
  }
  if (!tapes || !states || !alphabet) {
    throw ParseError(lines.front().number, "missing 'tapes', 'states' or 'alphabet'");
  }
  try {
    return {*states, *alphabet, *tapes, initial, std::move(finals), std::move(ts)};
  } catch (const InputError& e) {
    throw ParseError(lines.front().number, e.what());
  }
}

std::string serialize_multitape(const MultiTapeAutomaton& c) {
  std::ostringstream out;
  out << "mtnfa\n";
  out << "tapes " << c.tapes() << '\n';
  out << "states " << c.n_states() << '\n';
  out << "alphabet " << c.alphabet_size() << '\n';
  out << "initial " << c.initial() << '\n';
  out << "final";
  for (const State f : c.finals()) out << ' ' << f;
  out << '\n';
  for (const auto& t : c.transitions()) {
    out << "trans " << t.src << ' ' << t.letter << ' ' << t.tape << ' ' << t.dst << '\n';
  }
  return out.str();
}

}  // namespace nfai
