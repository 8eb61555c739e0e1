#include "nfai/hardness.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "nfai/text_format.hpp"

namespace nfai {

void UndirectedGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
  if (adjacent_[u * n_ + v] == 0) ++n_edges_;
  adjacent_[u * n_ + v] = 1;
  adjacent_[v * n_ + u] = 1;
}

std::vector<std::pair<std::size_t, std::size_t>> UndirectedGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void UndirectedGraph::set_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != n_) throw InputError("one name per vertex expected");
  names_ = std::move(names);
}

std::vector<Nfa> clique_to_dfas(const UndirectedGraph& g, std::size_t k) {
  if (k < 3) throw InputError("clique reduction needs k >= 3");
  const std::size_t n = g.n_vertices();
  std::vector<std::vector<State>> neighbours(n);
  for (const auto& [u, v] : g.edges()) {
    neighbours[u].push_back(static_cast<State>(v));
    neighbours[v].push_back(static_cast<State>(u));
  }

  // Chain states 0..len, then q_v = len + 1 + v.
  auto chain = [&](std::size_t len, std::vector<Transition>& ts) {
    for (std::size_t c = 0; c < len; ++c) {
      for (std::size_t v = 0; v < n; ++v) {
        ts.push_back({static_cast<State>(c), static_cast<Label>(v), static_cast<State>(c + 1)});
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      ts.push_back({static_cast<State>(len), static_cast<Label>(v), static_cast<State>(len + 1 + v)});
    }
  };

  std::vector<Nfa> out;
  for (std::size_t i = 0; i + 3 <= k; ++i) {
    std::vector<Transition> ts;
    chain(i, ts);
    std::vector<State> finals;
    for (std::size_t v = 0; v < n; ++v) {
      const auto q = static_cast<State>(i + 1 + v);
      finals.push_back(q);
      for (const State w : neighbours[v]) ts.push_back({q, w, q});
    }
    out.emplace_back(i + 1 + n, n, 0, std::move(finals), std::move(ts));
  }
  {
    const std::size_t len = k - 2;
    const auto final_state = static_cast<State>(len + 1 + n);
    std::vector<Transition> ts;
    chain(len, ts);
    for (std::size_t v = 0; v < n; ++v) {
      for (const State w : neighbours[v]) {
        ts.push_back({static_cast<State>(len + 1 + v), w, final_state});
      }
    }
    out.emplace_back(len + 2 + n, n, 0, std::vector<State>{final_state}, std::move(ts));
  }
  for (auto& a : out) a.set_letter_names(g.names());
  return out;
}

bool is_clique(const UndirectedGraph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.n_vertices()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool brute_force_has_clique(const UndirectedGraph& g, std::size_t k) {
  std::vector<std::size_t> chosen;
  // Extends `chosen` with vertices >= from that are adjacent to all chosen.
  auto search = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == k) return true;
    for (std::size_t v = from; v < g.n_vertices(); ++v) {
      bool ok = true;
      for (const auto u : chosen) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 0);
}

UndirectedGraph example_clique_graph() {
  UndirectedGraph g(5);
  const std::pair<std::size_t, std::size_t> edges[] = {{1, 2}, {1, 4}, {1, 5}, {2, 4}, {2, 5},
                                                        {4, 5}, {2, 3}, {3, 4}};
  for (const auto& [u, v] : edges) g.add_edge(u - 1, v - 1);
  g.set_names({"1", "2", "3", "4", "5"});
  return g;
}

Nfa random_nfa(std::size_t n, std::size_t alphabet_size, double density, std::uint64_t seed) {
  if (n == 0) throw InputError("random_nfa needs at least one state");
  if (!(density >= 0.0 && density <= 1.0)) throw InputError("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  const std::size_t universe = alphabet_size * n * n;
  std::vector<std::size_t> triples(universe);
  std::iota(triples.begin(), triples.end(), std::size_t{0});
  // Fisher-Yates with plain modulo so the stream is portable across
  // standard libraries.
  for (std::size_t i = universe; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(triples[i - 1], triples[j]);
  }
  const auto take = static_cast<std::size_t>(std::llround(density * static_cast<double>(universe)));
  std::vector<Transition> ts;
  ts.reserve(take);
  for (std::size_t t = 0; t < take; ++t) {
    const std::size_t code = triples[t];
    const auto dst = static_cast<State>(code % n);
    const auto letter = static_cast<Label>((code / n) % alphabet_size);
    const auto src = static_cast<State>(code / n / alphabet_size);
    ts.push_back({src, letter, dst});
  }
  std::vector<State> finals;
  for (State q = 0; q < n; ++q) {
    if ((rng() & 1U) != 0) finals.push_back(q);
  }
  return Nfa(n, alphabet_size, 0, std::move(finals), std::move(ts));
}

UndirectedGraph random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw InputError("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  UndirectedGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < edge_probability) g.add_edge(u, v);
    }
  }
  return g;
}

UndirectedGraph parse_graph(std::string_view source) {
  const auto lines = text::tokenize(source);
  if (lines.empty()) throw ParseError(1, "empty graph file");
  const auto& head = lines.front();
  if (head.tokens[0] != "graph" || head.tokens.size() != 2) {
    throw ParseError(head.number, "expected 'graph <n>'");
  }
  UndirectedGraph g(text::parse_index(head, head.tokens[1]));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] == "edge" && line.tokens.size() == 3) {
      try {
        g.add_edge(text::parse_index(line, line.tokens[1]), text::parse_index(line, line.tokens[2]));
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (line.tokens[0] == "names") {
      try {
        g.set_names({line.tokens.begin() + 1, line.tokens.end()});
      } catch (const InputError& e) {
        throw ParseError(line.number, e.what());
      }
    } else {
      throw ParseError(line.number, "expected 'edge <u> <v>'");
    }
  }
  return g;
}

std::string serialize_graph(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "graph " << g.n_vertices() << '\n';
  if (!g.names().empty()) {
    out << "names";
    for (const auto& name : g.names()) out << ' ' << name;
    out << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << "edge " << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace nfai
