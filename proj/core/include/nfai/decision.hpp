#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfai/automaton.hpp"
#include "nfai/bundle.hpp"
#include "nfai/product_space.hpp"

namespace nfai {

/// A path through a product space: codes.size() == labels.size() + 1.
struct ProductRun {
  std::vector<std::uint64_t> codes;
  std::vector<Label> labels;

  /// The non-epsilon labels in order.
  [[nodiscard]] Word word() const;
  bool operator==(const ProductRun&) const = default;
};

struct Decision {
  bool empty = true;
  /// Present iff !empty; starts at the initial state and ends in a final one.
  std::optional<ProductRun> witness_run;
  std::uint64_t explored_states = 0;
  std::uint64_t explored_transitions = 0;

  [[nodiscard]] std::optional<Word> witness() const {
    if (!witness_run) return std::nullopt;
    return witness_run->word();
  }
};

/// Breadth-first search of the nodding product's accessible part, stopping
/// at the first final state. The witness word is a shortest common word.
Decision decide_empty(const Bundle& bundle);

/// The same search over the direct product.
Decision decide_direct_baseline(const Bundle& bundle);

/// Breadth-first emptiness search over any product space.
Decision decide_over(const ProductSpace& space);

/// nullopt if `run` starts at the initial state, follows edges of `space`
/// and ends in a final state; otherwise a description of the first fault.
std::optional<std::string> validate_product_run(const ProductSpace& space, const ProductRun& run);

}  // namespace nfai
