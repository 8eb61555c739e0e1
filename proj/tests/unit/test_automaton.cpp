#include <catch_amalgamated.hpp>

#include <functional>

#include "nfai/automaton.hpp"
#include "nfai/hardness.hpp"
#include "nfai/oracle.hpp"
#include "nfai/text_format.hpp"
#include "support/support.hpp"

using namespace nfai;

namespace {

// (aa + bb + cc)*
Nfa doubled_letters() {
  std::vector<Transition> ts;
  for (Letter x = 0; x < 3; ++x) {
    ts.push_back({0, x, x + 1});
    ts.push_back({x + 1, x, 0});
  }
  return Nfa(4, 3, 0, {0}, ts);
}

// Depth-first enumeration of runs; true if one spelling w ends final.
bool dfs_accepts(const Nfa& a, const Word& w, State q, std::size_t pos) {
  if (pos == w.size()) return a.is_final(q);
  for (const State p : a.successors(q, w[pos])) {
    if (dfs_accepts(a, w, p, pos + 1)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("construction validates and deduplicates", "[automaton]") {
  Nfa a(2, 1, 0, {1, 1}, {{0, 0, 1}, {0, 0, 1}, {1, 0, 1}});
  CHECK(a.num_transitions() == 2);
  CHECK(a.finals() == std::vector<State>{1});
  CHECK_THROWS_AS(Nfa(2, 1, 0, {}, {{0, 0, 2}}), InputError);
  CHECK_THROWS_AS(Nfa(2, 1, 2, {}, {}), InputError);
  CHECK_THROWS_AS(Nfa(2, 1, 0, {}, {{0, 1, 1}}), InputError);
  CHECK_THROWS_AS(Nfa(0, 1, 0, {}, {}), InputError);
  CHECK_THROWS_AS(Nfa(2, 1, 0, {}, {{0, kEpsilon, 1}}), InputError);
  CHECK_NOTHROW(EpsilonNfa(2, 1, 0, {}, {{0, kEpsilon, 1}}));
}

TEST_CASE("accepts uses subset simulation", "[automaton]") {
  const Nfa a = doubled_letters();
  CHECK(accepts(a, Word{0, 0, 1, 1}));
  CHECK(accepts(a, Word{}));
  CHECK_FALSE(accepts(a, Word{0, 1}));
  CHECK_FALSE(accepts(a, Word{2}));
  CHECK_THROWS_AS(accepts(a, Word{3}), InputError);

  const Nfa no_final(1, 1, 0, {}, {});
  CHECK_FALSE(accepts(no_final, Word{}));
}

TEST_CASE("example clique DFA accept 1245", "[automaton]") {
  const auto dfas = clique_to_dfas(example_clique_graph(), 4);
  const Word w{0, 1, 3, 4};
  for (const auto& a : dfas) {
    CHECK(a.is_deterministic());
    CHECK(accepts(a, w));
  }
}

TEST_CASE("epsilon acceptance closes after every letter", "[automaton]") {
  const EpsilonNfa single(1, 1, 0, {0}, {});
  CHECK(epsilon_accepts(single, Word{}));

  const EpsilonNfa chain(2, 1, 0, {1}, {{0, kEpsilon, 1}});
  CHECK(epsilon_accepts(chain, Word{}));

  const EpsilonNfa after(3, 1, 0, {2}, {{0, 0, 1}, {1, kEpsilon, 2}});
  CHECK(epsilon_accepts(after, Word{0}));
  CHECK_FALSE(epsilon_accepts(after, Word{}));

  std::vector<char> set{1, 0};
  epsilon_closure(chain, set);
  CHECK(set == std::vector<char>{1, 1});
}

TEST_CASE("validate_run reports the first violation", "[automaton]") {
  const Nfa a = doubled_letters();
  CHECK(std::get<Word>(validate_run(a, Run{})).empty());

  const Run good{{{0, 0, 1}, {1, 0, 0}, {0, 1, 2}}};
  CHECK(std::get<Word>(validate_run(a, good)) == Word{0, 0, 1});

  const Run wrong_start{{{1, 0, 0}}};
  CHECK(std::get<RunViolation>(validate_run(a, wrong_start)) ==
        RunViolation{RunViolation::Kind::wrong_start, 0});

  const Run gap{{{0, 0, 1}, {0, 0, 1}}};
  CHECK(std::get<RunViolation>(validate_run(a, gap)) ==
        RunViolation{RunViolation::Kind::discontinuity, 1});

  const Run bogus{{{0, 0, 1}, {1, 1, 0}}};
  CHECK(std::get<RunViolation>(validate_run(a, bogus)) ==
        RunViolation{RunViolation::Kind::not_a_transition, 1});

  const auto dfas = clique_to_dfas(example_clique_graph(), 4);
  // A_0: chain state 0, q_v = 1 + v.
  const Run clique_run{{{0, 0, 1}, {1, 1, 1}, {1, 3, 1}, {1, 4, 1}}};
  CHECK(std::get<Word>(validate_run(dfas[0], clique_run)) == Word{0, 1, 3, 4});

  const EpsilonNfa e(2, 1, 0, {1}, {{0, kEpsilon, 1}, {1, 0, 1}});
  CHECK(std::get<Word>(validate_run(e, Run{{{0, kEpsilon, 1}, {1, 0, 1}}})) == Word{0});
}

TEST_CASE("adjacency matrices mirror the transition relation", "[automaton]") {
  const Nfa loop(2, 2, 0, {}, {{0, 0, 0}});
  const BoolMatrix m = adjacency_matrix(loop, 0);
  CHECK(m.count() == 1);
  CHECK(m.get(0, 0));
  CHECK(adjacency_matrix(loop, 1).is_zero());
  CHECK_THROWS_AS(adjacency_matrix(loop, 2), InputError);

  const auto a0 = clique_to_dfas(example_clique_graph(), 4)[0];
  const BoolMatrix one = adjacency_matrix(a0, 0);
  for (State p = 0; p < a0.n_states(); ++p) {
    for (State q = 0; q < a0.n_states(); ++q) CHECK(one.get(p, q) == a0.has_transition(p, 0, q));
  }

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Nfa a = random_nfa(4, 3, 0.4, seed);
    std::size_t bits = 0;
    for (Letter x = 0; x < 3; ++x) bits += adjacency_matrix(a, x).count();
    CHECK(bits == a.num_transitions());
  }
}

TEST_CASE("subset simulation agrees with run enumeration", "[automaton][property]") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Nfa a = random_nfa(1 + seed % 4, 2, 0.15 * static_cast<double>(seed % 6), seed);
    oracle::for_each_word(2, 6, [&](const Word& w) {
      REQUIRE(accepts(a, w) == dfs_accepts(a, w, a.initial(), 0));
    });
  }
}

TEST_CASE("text format round trip and errors", "[automaton][format]") {
  const auto minimal = parse_automaton("nfa\nstates 1\nalphabet 1\n");
  REQUIRE(std::holds_alternative<Nfa>(minimal));
  CHECK(std::get<Nfa>(minimal).num_transitions() == 0);

  try {
    (void)parse_automaton("nfa\nstates 2\nalphabet 1\ntrans 0 0 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_automaton("nfa\nstates 2\nalphabet 1\ntrans 0 - 1\n"), ParseError);
  CHECK_THROWS_AS(parse_automaton("dfa\nstates 2\nalphabet 1\ntrans 0 0 1\ntrans 0 0 0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_automaton("nfa\nstates 2\nalphabet 1\nbogus\n"), ParseError);
  CHECK_THROWS_AS(parse_automaton("nfsa\n"), ParseError);

  const auto dfas = clique_to_dfas(example_clique_graph(), 4);
  const Nfa& a2 = dfas[2];
  CHECK(parse_nfa(serialize_automaton(a2)) == a2);

  const EpsilonNfa e(3, 2, 1, {0, 2}, {{0, kEpsilon, 1}, {1, 1, 2}, {2, 0, 0}});
  CHECK(std::get<EpsilonNfa>(parse_automaton(serialize_automaton(e))) == e);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Nfa a = random_nfa(3, 2, 0.5, seed);
    CHECK(parse_nfa(serialize_automaton(a)) == a);
  }

  const Bundle b(std::vector<Nfa>(dfas.begin(), dfas.end()));
  const Bundle again = parse_bundle(serialize_bundle(b));
  CHECK(again.automata() == b.automata());
  CHECK_THROWS_AS(parse_bundle(""), ParseError);
  CHECK_THROWS_AS(parse_bundle("nfa\nstates 1\nalphabet 1\n"), ParseError);
  CHECK_THROWS_AS(parse_bundle("nfa\nstates 1\nalphabet 1\n---\nnfa\nstates 1\nalphabet 2\n"),
                  ParseError);
}
