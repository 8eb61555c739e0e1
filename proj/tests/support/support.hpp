#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "nfai/automaton.hpp"
#include "nfai/bool_matrix.hpp"
#include "nfai/bundle.hpp"
#include "nfai/relations.hpp"

namespace nfai::testing {

struct BundleSpec {
  std::size_t k = 2;
  std::size_t max_states = 3;
  std::size_t alphabet = 2;
  double density = 0.5;
  std::uint64_t seed = 0;
  /// Draw each component's state count from [1, max_states].
  bool vary_states = true;
};

Bundle random_bundle(const BundleSpec& spec);

/// The i-th of a fixed pseudo-random family of small bundles (k in {2, 3},
/// n <= 4, l <= 3, density in {0.2, 0.5, 1.0}).
Bundle corpus_bundle(std::size_t i);

BoolMatrix random_matrix(std::size_t rows, std::size_t cols, double density, std::mt19937_64& rng);

/// Textbook cubic boolean product.
BoolMatrix triple_loop_multiply(const BoolMatrix& a, const BoolMatrix& b);

/// Random k-tape automaton over `alphabet` letters.
MultiTapeAutomaton random_multitape(std::size_t tapes, std::size_t n_states, std::size_t alphabet,
                                    double density, std::uint64_t seed);

/// Exact RS satisfiability by breadth-first search over the synchronized
/// product of C with the k automata (C reading tape i moves A_i). Returns
/// the least total tuple length of a satisfying tuple, or nullopt.
std::optional<std::size_t> synchronized_rs_distance(const RsInstance& instance);

/// Searches tuples with sum of lengths <= max_total: every word accepted by
/// its automaton, the tuple accepted by the relation.
bool brute_force_rs(const RsInstance& instance, std::size_t max_total);

/// All words of length <= max_len accepted by `a`.
std::vector<Word> accepted_words(const Nfa& a, std::size_t max_len);

}  // namespace nfai::testing
