#include "nfai/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace nfai::oracle {

namespace {

// A node of the subset search: the k reachable-state masks, concatenated.
using SubsetTuple = std::vector<char>;

struct SubsetTupleHash {
  std::size_t operator()(const SubsetTuple& s) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (const char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

struct Layout {
  std::vector<std::size_t> offset;  // offset[i] = start of component i's mask
  std::size_t total = 0;
};

Layout layout_of(const Bundle& bundle) {
  Layout layout;
  for (const auto& a : bundle) {
    layout.offset.push_back(layout.total);
    layout.total += a.n_states();
  }
  return layout;
}

bool all_final(const Bundle& bundle, const Layout& layout, const SubsetTuple& node) {
  for (std::size_t i = 0; i < bundle.k(); ++i) {
    const auto& a = bundle[i];
    const bool hit = std::any_of(a.finals().begin(), a.finals().end(), [&](State f) {
      return node[layout.offset[i] + f] != 0;
    });
    if (!hit) return false;
  }
  return true;
}

// Returns nullopt when some component's set becomes empty (a dead node).
std::optional<SubsetTuple> step(const Bundle& bundle, const Layout& layout,
                                const SubsetTuple& node, Letter letter) {
  SubsetTuple next(layout.total, 0);
  for (std::size_t i = 0; i < bundle.k(); ++i) {
    const auto& a = bundle[i];
    bool any = false;
    for (State q = 0; q < a.n_states(); ++q) {
      if (node[layout.offset[i] + q] == 0) continue;
      for (const State p : a.successors(q, letter)) {
        next[layout.offset[i] + p] = 1;
        any = true;
      }
    }
    if (!any) return std::nullopt;
  }
  return next;
}

}  // namespace

Word restriction(std::span<const Letter> w, std::size_t i, std::size_t k) {
  if (i >= k) {
    throw InputError("restriction index " + std::to_string(i) + " must be below k = " +
                     std::to_string(k));
  }
  Word out;
  for (std::size_t pos = i; pos < w.size(); pos += k) out.push_back(w[pos]);
  return out;
}

std::optional<Word> interleave(std::span<const Word> words) {
  if (words.empty()) return Word{};
  const std::size_t t = words.front().size();
  for (const auto& w : words) {
    if (w.size() != t) return std::nullopt;
  }
  Word out;
  out.reserve(t * words.size());
  for (std::size_t j = 0; j < t; ++j) {
    for (const auto& w : words) out.push_back(w[j]);
  }
  return out;
}

Word k_stuttering(std::span<const Letter> w, std::size_t k) {
  if (k == 0) throw InputError("k-stuttering needs k >= 1");
  Word out;
  out.reserve(w.size() * k);
  for (const Letter a : w) out.insert(out.end(), k, a);
  return out;
}

bool all_accept(const Bundle& bundle, std::span<const Letter> w) {
  return std::all_of(bundle.begin(), bundle.end(), [&](const Nfa& a) { return accepts(a, w); });
}

WitnessSearch bounded_intersection_search(const Bundle& bundle, std::size_t max_len) {
  const Layout layout = layout_of(bundle);
  SubsetTuple start(layout.total, 0);
  for (std::size_t i = 0; i < bundle.k(); ++i) start[layout.offset[i] + bundle[i].initial()] = 1;

  // Nodes of one BFS layer are discovered in lexicographic order of their
  // least words, so the first accepting node gives the shortest word with the
  // lexicographic tie-break.
  struct Entry {
    std::size_t parent;
    Letter letter;
  };
  std::vector<SubsetTuple> nodes{start};
  std::vector<Entry> entries{{0, 0}};
  std::vector<std::size_t> depth{0};
  std::unordered_map<SubsetTuple, std::size_t, SubsetTupleHash> seen{{start, 0}};

  auto word_of = [&](std::size_t id) {
    Word w;
    for (std::size_t cur = id; cur != 0; cur = entries[cur].parent) {
      w.push_back(entries[cur].letter);
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  if (all_final(bundle, layout, start)) return {Word{}, false};

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (depth[head] == max_len) return {std::nullopt, false};
    for (Letter letter = 0; letter < bundle.alphabet_size(); ++letter) {
      auto next = step(bundle, layout, nodes[head], letter);
      if (!next) continue;
      if (seen.contains(*next)) continue;
      const std::size_t id = nodes.size();
      seen.emplace(*next, id);
      nodes.push_back(std::move(*next));
      entries.push_back({head, letter});
      depth.push_back(depth[head] + 1);
      if (all_final(bundle, layout, nodes[id])) return {word_of(id), false};
    }
  }
  return {std::nullopt, true};
}

std::optional<Word> bounded_intersection_witness(const Bundle& bundle, std::size_t max_len) {
  return bounded_intersection_search(bundle, max_len).witness;
}

bool check_interleaving_identity(const Bundle& bundle, std::size_t max_len) {
  const std::size_t k = bundle.k();
  bool holds = true;
  for_each_word(bundle.alphabet_size(), max_len, [&](const Word& w) {
    if (!holds) return;
    const bool in_intersection = all_accept(bundle, w);

    const std::vector<Word> copies(k, w);
    const auto shuffled = interleave(copies);
    bool in_shuffle = shuffled.has_value() && shuffled->size() % k == 0;
    for (std::size_t i = 0; in_shuffle && i < k; ++i) {
      in_shuffle = accepts(bundle[i], restriction(*shuffled, i, k));
    }
    bool block_constant = shuffled.has_value();
    for (std::size_t pos = 0; block_constant && pos < shuffled->size(); ++pos) {
      block_constant = (*shuffled)[pos] == (*shuffled)[pos - pos % k];
    }
    const bool restores = shuffled.has_value() && restriction(*shuffled, 0, k) == w;

    if (in_intersection != (in_shuffle && block_constant && restores)) holds = false;
  });
  return holds;
}

}  // namespace nfai::oracle
