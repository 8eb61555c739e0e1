#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nfai/automaton.hpp"

namespace nfai {

/// k >= 2 NFA over one common alphabet: an intersection-emptiness instance.
class Bundle {
 public:
  /// Throws InputError when fewer than two automata are given or their
  /// alphabets differ.
  explicit Bundle(std::vector<Nfa> automata);

  [[nodiscard]] std::size_t k() const noexcept { return automata_.size(); }
  [[nodiscard]] std::size_t alphabet_size() const noexcept {
    return automata_.front().alphabet_size();
  }
  [[nodiscard]] const Nfa& operator[](std::size_t i) const { return automata_.at(i); }
  [[nodiscard]] const std::vector<Nfa>& automata() const noexcept { return automata_; }

  [[nodiscard]] auto begin() const noexcept { return automata_.begin(); }
  [[nodiscard]] auto end() const noexcept { return automata_.end(); }

  /// n: the largest state count among the components.
  [[nodiscard]] std::size_t max_states() const noexcept;
  /// m: the largest transition count among the components.
  [[nodiscard]] std::size_t max_transitions() const noexcept;
  /// Per-component state counts, in component order.
  [[nodiscard]] std::vector<std::size_t> state_counts() const;
  /// |Q_0 x ... x Q_{k-1}|. Throws InputError on 64-bit overflow.
  [[nodiscard]] std::uint64_t tuple_count() const;

  /// True when some component has no final state.
  [[nodiscard]] bool has_empty_final_set() const noexcept;

 private:
  std::vector<Nfa> automata_;
};

/// Saturating a^b for size bounds; returns UINT64_MAX on overflow.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) noexcept;
/// Saturating a*b.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace nfai
