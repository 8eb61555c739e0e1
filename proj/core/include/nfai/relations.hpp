#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nfai/automaton.hpp"
#include "nfai/bundle.hpp"

namespace nfai {

struct TapeTransition {
  State src{};
  Letter letter{};
  std::size_t tape{};
  State dst{};
  auto operator<=>(const TapeTransition&) const = default;
};

/// One-way k-tape automaton: every transition reads one letter from one
/// tape. A tuple is accepted when some run ends in a final state with every
/// head at the end of its tape.
class MultiTapeAutomaton {
 public:
  MultiTapeAutomaton() = default;
  /// Validates indices, sorts and deduplicates transitions.
  MultiTapeAutomaton(std::size_t n_states, std::size_t alphabet_size, std::size_t tapes,
                     State initial, std::vector<State> finals,
                     std::vector<TapeTransition> transitions);

  [[nodiscard]] std::size_t n_states() const noexcept { return n_states_; }
  [[nodiscard]] std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  [[nodiscard]] std::size_t tapes() const noexcept { return tapes_; }
  [[nodiscard]] State initial() const noexcept { return initial_; }
  [[nodiscard]] const std::vector<State>& finals() const noexcept { return finals_; }
  [[nodiscard]] bool is_final(State q) const;
  [[nodiscard]] const std::vector<TapeTransition>& transitions() const noexcept {
    return transitions_;
  }

  bool operator==(const MultiTapeAutomaton&) const = default;

 private:
  std::size_t n_states_ = 0;
  std::size_t alphabet_size_ = 0;
  std::size_t tapes_ = 0;
  State initial_ = 0;
  std::vector<State> finals_;
  std::vector<TapeTransition> transitions_;
};

/// Breadth-first search over (state, head positions). Meant for small
/// inputs. Throws InputError when words.size() != c.tapes().
bool multitape_accepts(const MultiTapeAutomaton& c, const std::vector<Word>& words);

/// 1 + (k - 1) * l states: a base state and, per letter a, a chain that
/// reads a on tapes 0, ..., k-1 in turn. Throws InputError when k < 2.
MultiTapeAutomaton equality_relation(std::size_t k, std::size_t alphabet_size);

/// k NFA plus a k-tape automaton: satisfiable iff some w_i in L(A_i) form a
/// tuple in L(C).
struct RsInstance {
  Bundle automata;
  MultiTapeAutomaton relation;
};

/// Keeps A_0 .. A_{k-1} and folds A_k into an equality-checking k-tape
/// automaton. Throws InputError when the bundle has fewer than 3 automata.
RsInstance ie_to_rs(const Bundle& bundle);

/// k + 1 NFA over the tagged alphabet (a, i) -> a * k + i. Throws InputError
/// when the shapes disagree.
Bundle rs_to_ie(const RsInstance& instance);

/// Non-emptiness of rs_to_ie(instance).
bool decide_rs(const RsInstance& instance);

[[nodiscard]] inline Letter tagged_letter(Letter a, std::size_t tape, std::size_t k) {
  return static_cast<Letter>(a * k + tape);
}

// Text format:
//
//   mtnfa
//   tapes 2
//   states 3
//   alphabet 2
//   initial 0
//   final 0
//   trans 0 1 0 1    # src letter tape dst
MultiTapeAutomaton parse_multitape(std::string_view text);
std::string serialize_multitape(const MultiTapeAutomaton& c);

}  // namespace nfai
