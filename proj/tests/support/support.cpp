#include "support/support.hpp"

#include <deque>
#include <map>

#include "nfai/hardness.hpp"
#include "nfai/oracle.hpp"

namespace nfai::testing {

Bundle random_bundle(const BundleSpec& spec) {
  std::mt19937_64 rng(spec.seed ^ 0x5bd1e995ULL);
  std::vector<Nfa> automata;
  for (std::size_t i = 0; i < spec.k; ++i) {
    const std::size_t n = spec.vary_states ? 1 + rng() % spec.max_states : spec.max_states;
    automata.push_back(random_nfa(n, spec.alphabet, spec.density, rng()));
  }
  return Bundle(std::move(automata));
}

Bundle corpus_bundle(std::size_t i) {
  static constexpr double kDensities[] = {0.2, 0.5, 1.0};
  std::mt19937_64 rng(0xC0FFEEULL + i);
  BundleSpec spec;
  spec.k = 2 + rng() % 2;
  spec.max_states = 1 + rng() % 4;
  spec.alphabet = 1 + rng() % 3;
  spec.density = kDensities[i % 3];
  spec.seed = rng();
  return random_bundle(spec);
}

BoolMatrix random_matrix(std::size_t rows, std::size_t cols, double density,
                         std::mt19937_64& rng) {
  std::bernoulli_distribution bit(density);
  BoolMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (bit(rng)) m.set(r, c);
    }
  }
  return m;
}

BoolMatrix triple_loop_multiply(const BoolMatrix& a, const BoolMatrix& b) {
  BoolMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool v = false;
      for (std::size_t t = 0; t < a.cols() && !v; ++t) v = a.get(i, t) && b.get(t, j);
      c.set(i, j, v);
    }
  }
  return c;
}

MultiTapeAutomaton random_multitape(std::size_t tapes, std::size_t n_states, std::size_t alphabet,
                                    double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::vector<TapeTransition> ts;
  for (State p = 0; p < n_states; ++p) {
    for (Letter a = 0; a < alphabet; ++a) {
      for (std::size_t t = 0; t < tapes; ++t) {
        for (State q = 0; q < n_states; ++q) {
          if (keep(rng)) ts.push_back({p, a, t, q});
        }
      }
    }
  }
  std::vector<State> finals;
  for (State q = 0; q < n_states; ++q) {
    if (rng() % 2 == 0) finals.push_back(q);
  }
  return {n_states, alphabet, tapes, 0, std::move(finals), std::move(ts)};
}

std::optional<std::size_t> synchronized_rs_distance(const RsInstance& instance) {
  const Bundle& bundle = instance.automata;
  const MultiTapeAutomaton& c = instance.relation;
  const std::size_t k = bundle.k();
  using Node = std::vector<State>;  // (q_0, ..., q_{k-1}, c)
  auto accepting = [&](const Node& node) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!bundle[i].is_final(node[i])) return false;
    }
    return c.is_final(node[k]);
  };
  Node start(k + 1);
  for (std::size_t i = 0; i < k; ++i) start[i] = bundle[i].initial();
  start[k] = c.initial();
  std::map<Node, std::size_t> dist{{start, 0}};
  std::deque<Node> queue{start};
  while (!queue.empty()) {
    Node node = queue.front();
    queue.pop_front();
    const std::size_t d = dist.at(node);
    if (accepting(node)) return d;
    for (const auto& t : c.transitions()) {
      if (t.src != node[k]) continue;
      for (const State p : bundle[t.tape].successors(node[t.tape], t.letter)) {
        Node next = node;
        next[t.tape] = p;
        next[k] = t.dst;
        if (dist.emplace(next, d + 1).second) queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

std::vector<Word> accepted_words(const Nfa& a, std::size_t max_len) {
  std::vector<Word> out;
  oracle::for_each_word(a.alphabet_size(), max_len, [&](const Word& w) {
    if (accepts(a, w)) out.push_back(w);
  });
  return out;
}

bool brute_force_rs(const RsInstance& instance, std::size_t max_total) {
  const Bundle& bundle = instance.automata;
  std::vector<std::vector<Word>> pools;
  for (const auto& a : bundle) pools.push_back(accepted_words(a, max_total));
  std::vector<Word> tuple(bundle.k());
  auto search = [&](auto&& self, std::size_t i, std::size_t budget) -> bool {
    if (i == bundle.k()) return multitape_accepts(instance.relation, tuple);
    for (const auto& w : pools[i]) {
      if (w.size() > budget) continue;
      tuple[i] = w;
      if (self(self, i + 1, budget - w.size())) return true;
    }
    return false;
  };
  return search(search, 0, max_total);
}

}  // namespace nfai::testing
