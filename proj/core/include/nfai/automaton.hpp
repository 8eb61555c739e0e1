#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nfai/bool_matrix.hpp"

namespace nfai {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// A transition label: either a letter index or kEpsilon.
using Label = std::uint32_t;

/// Reserved epsilon label. Never a valid letter index.
inline constexpr Label kEpsilon = std::numeric_limits<Label>::max();

using Word = std::vector<Letter>;

/// Raised for malformed automata, out-of-range indices and shape mismatches.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Transition {
  State src{};
  Label label{};
  State dst{};

  auto operator<=>(const Transition&) const = default;
};

/// A string of transitions. An empty run sits at the initial state.
struct Run {
  std::vector<Transition> steps;

  bool operator==(const Run&) const = default;
};

/// Automaton over a dense alphabet [0, alphabet_size) with dense states
/// [0, n_states). The transition set is deduplicated on construction and
/// stored as adjacency lists grouped by (state, label).
///
/// `AllowEpsilon` selects between NFA and epsilon-NFA. The two are distinct
/// types so that products which must be epsilon-free say so in their
/// signatures.
template <bool AllowEpsilon>
class BasicAutomaton {
 public:
  static constexpr bool kAllowsEpsilon = AllowEpsilon;

  BasicAutomaton() = default;

  /// Validates every index and deduplicates `transitions`.
  /// Throws InputError when an index is out of range, when n_states == 0,
  /// or when an epsilon label is used on an epsilon-free automaton.
  BasicAutomaton(std::size_t n_states, std::size_t alphabet_size, State initial,
                 std::vector<State> finals, std::vector<Transition> transitions);

  [[nodiscard]] std::size_t n_states() const noexcept { return n_states_; }
  [[nodiscard]] std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  [[nodiscard]] State initial() const noexcept { return initial_; }
  /// Sorted, duplicate-free.
  [[nodiscard]] const std::vector<State>& finals() const noexcept { return finals_; }
  [[nodiscard]] bool is_final(State q) const { return final_mask_.at(q) != 0; }

  /// Sorted by (src, label, dst), duplicate-free.
  [[nodiscard]] const std::vector<Transition>& transitions() const noexcept {
    return transitions_;
  }
  [[nodiscard]] std::size_t num_transitions() const noexcept { return transitions_.size(); }

  /// Successors of `q` on `label` (a letter or kEpsilon), sorted ascending.
  [[nodiscard]] std::span<const State> successors(State q, Label label) const;
  [[nodiscard]] bool has_transition(State src, Label label, State dst) const;

  /// At most one successor per (state, letter) and no epsilon transitions.
  [[nodiscard]] bool is_deterministic() const;

  /// Optional human-readable letter names (file-format name table only).
  [[nodiscard]] const std::vector<std::string>& letter_names() const noexcept {
    return letter_names_;
  }
  void set_letter_names(std::vector<std::string> names);

  bool operator==(const BasicAutomaton& other) const {
    return n_states_ == other.n_states_ && alphabet_size_ == other.alphabet_size_ &&
           initial_ == other.initial_ && finals_ == other.finals_ &&
           transitions_ == other.transitions_ && letter_names_ == other.letter_names_;
  }

 private:
  [[nodiscard]] std::size_t slots() const noexcept {
    return alphabet_size_ + (AllowEpsilon ? 1 : 0);
  }
  [[nodiscard]] std::size_t slot_of(Label label) const;

  std::size_t n_states_ = 0;
  std::size_t alphabet_size_ = 0;
  State initial_ = 0;
  std::vector<State> finals_;
  std::vector<char> final_mask_;
  std::vector<Transition> transitions_;
  // CSR adjacency: targets_[offsets_[q * slots() + slot] .. offsets_[... + 1]).
  std::vector<std::size_t> offsets_;
  std::vector<State> targets_;
  std::vector<std::string> letter_names_;
};

using Nfa = BasicAutomaton<false>;
using EpsilonNfa = BasicAutomaton<true>;
using AnyAutomaton = std::variant<Nfa, EpsilonNfa>;

extern template class BasicAutomaton<false>;
extern template class BasicAutomaton<true>;

/// Widens an NFA to an epsilon-NFA with the same transitions.
EpsilonNfa to_epsilon_nfa(const Nfa& a);

/// Narrows an epsilon-NFA that happens to have no epsilon transitions.
/// Throws InputError otherwise.
Nfa to_nfa(const EpsilonNfa& a);

/// Forward subset simulation. Throws InputError on out-of-range letters.
bool accepts(const Nfa& a, std::span<const Letter> w);

/// Subset simulation with epsilon closure after the initial state and after
/// every consumed letter.
bool epsilon_accepts(const EpsilonNfa& a, std::span<const Letter> w);

/// Epsilon closure of `states` in place (a 0/1 mask of size n_states).
void epsilon_closure(const EpsilonNfa& a, std::vector<char>& states);

struct RunViolation {
  enum class Kind { wrong_start, discontinuity, not_a_transition };

  Kind kind{};
  std::size_t step = 0;

  bool operator==(const RunViolation&) const = default;
};

std::string to_string(RunViolation::Kind kind);

/// Either the word spelled by the run or the first violated run condition.
using RunCheck = std::variant<Word, RunViolation>;

template <bool AllowEpsilon>
RunCheck validate_run(const BasicAutomaton<AllowEpsilon>& a, const Run& r);

/// State reached by a run that validates (the initial state for an empty run).
State run_end(State initial, const Run& r);

/// n x n matrix with (i, j) = 1 iff (i, letter, j) is a transition.
template <bool AllowEpsilon>
BoolMatrix adjacency_matrix(const BasicAutomaton<AllowEpsilon>& a, Letter letter);

}  // namespace nfai
