#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nfai/automaton.hpp"
#include "nfai/bundle.hpp"

/// Brute-force reference implementations. Nothing in this namespace uses a
/// product construction, so the products, the decider and the certificates
/// can all be checked against it.
namespace nfai::oracle {

/// x_i x_{i+k} x_{i+2k} ...; empty when i >= |w|. Throws InputError if i >= k.
Word restriction(std::span<const Letter> w, std::size_t i, std::size_t k);

/// Letter-by-letter interleaving of equal-length words; nullopt if the
/// lengths differ. The (j*k + i)-th letter is words[i][j].
std::optional<Word> interleave(std::span<const Word> words);

/// Repeats every letter k times. Throws InputError if k == 0.
Word k_stuttering(std::span<const Letter> w, std::size_t k);

struct WitnessSearch {
  /// Shortest (then lexicographically least) common word within the horizon.
  std::optional<Word> witness;
  /// True when the search space closed before the horizon, so an absent
  /// witness proves emptiness outright.
  bool exhausted = false;
};

/// Breadth-first search over k-tuples of per-automaton reachable state sets.
WitnessSearch bounded_intersection_search(const Bundle& bundle, std::size_t max_len);

/// Shortest-then-lexicographic word of length <= max_len accepted by all
/// components, or nullopt.
std::optional<Word> bounded_intersection_witness(const Bundle& bundle, std::size_t max_len);

/// Extensional check of the interleaving identity on all words up to
/// max_len: w is in every language iff the k-fold interleaving of w with
/// itself lies in the interleaving of the languages, lies in the
/// block-constant language (a_0^k + ... + a_{l-1}^k)*, and restricts back to w.
bool check_interleaving_identity(const Bundle& bundle, std::size_t max_len);

/// Calls `visit(w)` for every word over [0, alphabet_size) with |w| <= max_len,
/// shortest first, lexicographic within a length.
template <class Visitor>
void for_each_word(std::size_t alphabet_size, std::size_t max_len, Visitor&& visit) {
  Word w;
  visit(std::as_const(w));
  if (alphabet_size == 0) return;
  for (std::size_t len = 1; len <= max_len; ++len) {
    w.assign(len, 0);
    while (true) {
      visit(std::as_const(w));
      std::size_t pos = len;
      while (pos > 0 && w[pos - 1] + 1 == alphabet_size) {
        w[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
      ++w[pos - 1];
    }
  }
}

/// Conjunction of accepts() over all components.
bool all_accept(const Bundle& bundle, std::span<const Letter> w);

}  // namespace nfai::oracle
