#include "nfai/automaton.hpp"

#include <algorithm>

namespace nfai {

namespace {

std::string describe_index(const char* what, std::size_t value, std::size_t bound) {
  return std::string(what) + " " + std::to_string(value) + " out of range [0, " +
         std::to_string(bound) + ")";
}

void check_word(std::size_t alphabet_size, std::span<const Letter> w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= alphabet_size) {
      throw InputError(describe_index("letter", w[i], alphabet_size) + " at word position " +
                       std::to_string(i));
    }
  }
}

}  // namespace

template <bool AllowEpsilon>
BasicAutomaton<AllowEpsilon>::BasicAutomaton(std::size_t n_states, std::size_t alphabet_size,
                                             State initial, std::vector<State> finals,
                                             std::vector<Transition> transitions)
    : n_states_(n_states), alphabet_size_(alphabet_size), initial_(initial) {
  if (n_states == 0) throw InputError("automaton needs at least one state");
  if (n_states > std::numeric_limits<State>::max()) throw InputError("too many states");
  if (initial >= n_states) throw InputError(describe_index("initial state", initial, n_states));
  for (const State f : finals) {
    if (f >= n_states) throw InputError(describe_index("final state", f, n_states));
  }
  for (const auto& t : transitions) {
    if (t.src >= n_states) throw InputError(describe_index("source state", t.src, n_states));
    if (t.dst >= n_states) throw InputError(describe_index("target state", t.dst, n_states));
    if (t.label == kEpsilon) {
      if (!AllowEpsilon) throw InputError("epsilon transition in an epsilon-free automaton");
    } else if (t.label >= alphabet_size) {
      throw InputError(describe_index("letter", t.label, alphabet_size));
    }
  }

  std::sort(finals.begin(), finals.end());
  finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
  finals_ = std::move(finals);
  final_mask_.assign(n_states, 0);
  for (const State f : finals_) final_mask_[f] = 1;

  std::sort(transitions.begin(), transitions.end());
  transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
  transitions_ = std::move(transitions);

  // Transitions are sorted by (src, label) and kEpsilon sorts last, which is
  // exactly the slot order, so one counting pass fills the CSR arrays.
  offsets_.assign(n_states_ * slots() + 1, 0);
  for (const auto& t : transitions_) ++offsets_[t.src * slots() + slot_of(t.label) + 1];
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  targets_.reserve(transitions_.size());
  for (const auto& t : transitions_) targets_.push_back(t.dst);
}

template <bool AllowEpsilon>
std::size_t BasicAutomaton<AllowEpsilon>::slot_of(Label label) const {
  if (label == kEpsilon) {
    if constexpr (AllowEpsilon) {
      return alphabet_size_;
    } else {
      throw InputError("epsilon label on an epsilon-free automaton");
    }
  }
  if (label >= alphabet_size_) throw InputError(describe_index("letter", label, alphabet_size_));
  return label;
}

template <bool AllowEpsilon>
std::span<const State> BasicAutomaton<AllowEpsilon>::successors(State q, Label label) const {
  if (q >= n_states_) throw InputError(describe_index("state", q, n_states_));
  const std::size_t slot = q * slots() + slot_of(label);
  return {targets_.data() + offsets_[slot], offsets_[slot + 1] - offsets_[slot]};
}

template <bool AllowEpsilon>
bool BasicAutomaton<AllowEpsilon>::has_transition(State src, Label label, State dst) const {
  if (src >= n_states_ || dst >= n_states_) return false;
  if (label != kEpsilon && label >= alphabet_size_) return false;
  if (label == kEpsilon && !AllowEpsilon) return false;
  const auto succ = successors(src, label);
  return std::binary_search(succ.begin(), succ.end(), dst);
}

template <bool AllowEpsilon>
bool BasicAutomaton<AllowEpsilon>::is_deterministic() const {
  for (std::size_t i = 1; i < transitions_.size(); ++i) {
    const auto& prev = transitions_[i - 1];
    const auto& cur = transitions_[i];
    if (prev.src == cur.src && prev.label == cur.label) return false;
  }
  if constexpr (AllowEpsilon) {
    for (const auto& t : transitions_) {
      if (t.label == kEpsilon) return false;
    }
  }
  return true;
}

template <bool AllowEpsilon>
void BasicAutomaton<AllowEpsilon>::set_letter_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != alphabet_size_) {
    throw InputError("letter name table has " + std::to_string(names.size()) +
                     " entries for an alphabet of size " + std::to_string(alphabet_size_));
  }
  letter_names_ = std::move(names);
}

template class BasicAutomaton<false>;
template class BasicAutomaton<true>;

EpsilonNfa to_epsilon_nfa(const Nfa& a) {
  EpsilonNfa out(a.n_states(), a.alphabet_size(), a.initial(), a.finals(), a.transitions());
  out.set_letter_names(a.letter_names());
  return out;
}

Nfa to_nfa(const EpsilonNfa& a) {
  Nfa out(a.n_states(), a.alphabet_size(), a.initial(), a.finals(), a.transitions());
  out.set_letter_names(a.letter_names());
  return out;
}

bool accepts(const Nfa& a, std::span<const Letter> w) {
  check_word(a.alphabet_size(), w);
  std::vector<char> current(a.n_states(), 0);
  std::vector<char> next(a.n_states(), 0);
  current[a.initial()] = 1;
  for (const Letter letter : w) {
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (State q = 0; q < a.n_states(); ++q) {
      if (current[q] == 0) continue;
      for (const State p : a.successors(q, letter)) {
        next[p] = 1;
        any = true;
      }
    }
    if (!any) return false;
    current.swap(next);
  }
  for (const State f : a.finals()) {
    if (current[f] != 0) return true;
  }
  return false;
}

void epsilon_closure(const EpsilonNfa& a, std::vector<char>& states) {
  std::vector<State> stack;
  for (State q = 0; q < a.n_states(); ++q) {
    if (states[q] != 0) stack.push_back(q);
  }
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (const State p : a.successors(q, kEpsilon)) {
      if (states[p] == 0) {
        states[p] = 1;
        stack.push_back(p);
      }
    }
  }
}

bool epsilon_accepts(const EpsilonNfa& a, std::span<const Letter> w) {
  check_word(a.alphabet_size(), w);
  std::vector<char> current(a.n_states(), 0);
  std::vector<char> next(a.n_states(), 0);
  current[a.initial()] = 1;
  epsilon_closure(a, current);
  for (const Letter letter : w) {
    std::fill(next.begin(), next.end(), 0);
    for (State q = 0; q < a.n_states(); ++q) {
      if (current[q] == 0) continue;
      for (const State p : a.successors(q, letter)) next[p] = 1;
    }
    epsilon_closure(a, next);
    current.swap(next);
  }
  for (const State f : a.finals()) {
    if (current[f] != 0) return true;
  }
  return false;
}

std::string to_string(RunViolation::Kind kind) {
  switch (kind) {
    case RunViolation::Kind::wrong_start:
      return "wrong-start";
    case RunViolation::Kind::discontinuity:
      return "discontinuity";
    case RunViolation::Kind::not_a_transition:
      return "not-a-transition";
  }
  return "unknown";
}

template <bool AllowEpsilon>
RunCheck validate_run(const BasicAutomaton<AllowEpsilon>& a, const Run& r) {
  Word word;
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& t = r.steps[i];
    if (i == 0 && t.src != a.initial()) return RunViolation{RunViolation::Kind::wrong_start, i};
    if (i > 0 && r.steps[i - 1].dst != t.src) {
      return RunViolation{RunViolation::Kind::discontinuity, i};
    }
    if (!a.has_transition(t.src, t.label, t.dst)) {
      return RunViolation{RunViolation::Kind::not_a_transition, i};
    }
    if (t.label != kEpsilon) word.push_back(t.label);
  }
  return word;
}

template RunCheck validate_run(const Nfa&, const Run&);
template RunCheck validate_run(const EpsilonNfa&, const Run&);

State run_end(State initial, const Run& r) {
  return r.steps.empty() ? initial : r.steps.back().dst;
}

template <bool AllowEpsilon>
BoolMatrix adjacency_matrix(const BasicAutomaton<AllowEpsilon>& a, Letter letter) {
  if (letter >= a.alphabet_size()) {
    throw InputError(describe_index("letter", letter, a.alphabet_size()));
  }
  BoolMatrix m(a.n_states(), a.n_states());
  for (State q = 0; q < a.n_states(); ++q) {
    for (const State p : a.successors(q, letter)) m.set(q, p);
  }
  return m;
}

template BoolMatrix adjacency_matrix(const Nfa&, Letter);
template BoolMatrix adjacency_matrix(const EpsilonNfa&, Letter);

}  // namespace nfai
