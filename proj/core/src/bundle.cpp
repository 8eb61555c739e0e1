#include "nfai/bundle.hpp"

#include <algorithm>
#include <limits>

namespace nfai {

Bundle::Bundle(std::vector<Nfa> automata) : automata_(std::move(automata)) {
  if (automata_.size() < 2) {
    throw InputError("a bundle needs at least two automata, got " +
                     std::to_string(automata_.size()));
  }
  const std::size_t ell = automata_.front().alphabet_size();
  for (std::size_t i = 1; i < automata_.size(); ++i) {
    if (automata_[i].alphabet_size() != ell) {
      throw InputError("mixed alphabets: automaton 0 has " + std::to_string(ell) +
                       " letters, automaton " + std::to_string(i) + " has " +
                       std::to_string(automata_[i].alphabet_size()));
    }
  }
}

std::size_t Bundle::max_states() const noexcept {
  std::size_t n = 0;
  for (const auto& a : automata_) n = std::max(n, a.n_states());
  return n;
}

std::size_t Bundle::max_transitions() const noexcept {
  std::size_t m = 0;
  for (const auto& a : automata_) m = std::max(m, a.num_transitions());
  return m;
}

std::vector<std::size_t> Bundle::state_counts() const {
  std::vector<std::size_t> counts;
  counts.reserve(automata_.size());
  for (const auto& a : automata_) counts.push_back(a.n_states());
  return counts;
}

std::uint64_t Bundle::tuple_count() const {
  std::uint64_t total = 1;
  for (const auto& a : automata_) {
    total = saturating_mul(total, a.n_states());
    if (total == std::numeric_limits<std::uint64_t>::max()) {
      throw InputError("product state space does not fit in 64 bits");
    }
  }
  return total;
}

bool Bundle::has_empty_final_set() const noexcept {
  return std::any_of(automata_.begin(), automata_.end(),
                     [](const Nfa& a) { return a.finals().empty(); });
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) noexcept {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) result = saturating_mul(result, base);
  return result;
}

}  // namespace nfai
