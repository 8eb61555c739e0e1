#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nfai/automaton.hpp"

namespace nfai {

/// Simple undirected graph on vertices [0, n).
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n_vertices)
      : n_(n_vertices), adjacent_(n_vertices * n_vertices, 0) {}

  [[nodiscard]] std::size_t n_vertices() const noexcept { return n_; }
  /// Throws InputError on self-loops and out-of-range vertices.
  void add_edge(std::size_t u, std::size_t v);
  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const {
    return adjacent_.at(u * n_ + v) != 0;
  }
  /// Unordered pairs (u, v) with u < v, sorted.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  [[nodiscard]] std::size_t n_edges() const noexcept { return n_edges_; }

  /// Optional display names, one per vertex.
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  void set_names(std::vector<std::string> names);

  bool operator==(const UndirectedGraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t n_edges_ = 0;
  std::vector<char> adjacent_;
  std::vector<std::string> names_;
};

/// k - 1 DFA over the vertex alphabet that accept a common word iff the
/// graph has a k-clique. A common word lists the clique's k vertices.
/// Throws InputError when k < 3.
std::vector<Nfa> clique_to_dfas(const UndirectedGraph& g, std::size_t k);

bool brute_force_has_clique(const UndirectedGraph& g, std::size_t k);

/// True when the vertices are pairwise distinct and pairwise adjacent.
bool is_clique(const UndirectedGraph& g, const std::vector<std::size_t>& vertices);

/// Vertices 1..5 as letters 0..4: the 4-clique {1,2,4,5} plus the edges 2-3
/// and 3-4.
UndirectedGraph example_clique_graph();

/// n states, initial state 0, round(density * l * n^2) distinct transitions
/// drawn uniformly, each state final with probability 1/2. Deterministic in
/// the seed. Throws InputError for n == 0 or density outside [0, 1].
Nfa random_nfa(std::size_t n, std::size_t alphabet_size, double density, std::uint64_t seed);

/// G(n, p). Throws InputError for p outside [0, 1].
UndirectedGraph random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

// Graph text format: "graph <n>" followed by "edge <u> <v>" lines and an
// optional "names <name_0> ... <name_{n-1}>" line.
UndirectedGraph parse_graph(std::string_view text);
std::string serialize_graph(const UndirectedGraph& g);

}  // namespace nfai
