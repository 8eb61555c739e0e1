#include <catch_amalgamated.hpp>

#include <random>

#include "nfai/hardness.hpp"
#include "nfai/oracle.hpp"
#include "support/support.hpp"

using namespace nfai;
using namespace nfai::oracle;

TEST_CASE("restriction", "[oracle]") {
  const Word w{0, 1, 2, 3, 4, 5};  // abcdef
  CHECK(restriction(w, 0, 2) == Word{0, 2, 4});
  CHECK(restriction(w, 1, 3) == Word{1, 4});
  CHECK(restriction(Word{}, 1, 3).empty());
  CHECK(restriction(Word{0}, 2, 3).empty());
  CHECK_THROWS_AS(restriction(w, 3, 3), InputError);
}

TEST_CASE("interleave", "[oracle]") {
  CHECK(interleave(std::vector<Word>{{0, 1}, {2, 3}}) == Word{0, 2, 1, 3});
  CHECK_FALSE(interleave(std::vector<Word>{{0}, {1, 2}}).has_value());

  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    const std::size_t k = 1 + rng() % 4;
    const std::size_t len = rng() % 6;
    std::vector<Word> ws(k, Word(len));
    for (auto& w : ws) {
      for (auto& x : w) x = static_cast<Letter>(rng() % 3);
    }
    const auto mixed = interleave(ws);
    REQUIRE(mixed.has_value());
    for (std::size_t i = 0; i < k; ++i) CHECK(restriction(*mixed, i, k) == ws[i]);
  }
}

TEST_CASE("k-stuttering", "[oracle]") {
  CHECK(k_stuttering(Word{0, 1}, 2) == Word{0, 0, 1, 1});
  CHECK(k_stuttering(Word{}, 4).empty());
  CHECK(k_stuttering(Word{0, 1, 2}, 3) == Word{0, 0, 0, 1, 1, 1, 2, 2, 2});
  CHECK_THROWS_AS(k_stuttering(Word{0}, 0), InputError);

  const Word w{2, 0, 1};
  const std::vector<Word> copies(3, w);
  CHECK(*interleave(copies) == k_stuttering(w, 3));
}

TEST_CASE("bounded intersection witness", "[oracle]") {
  const Nfa empty_final(2, 2, 0, {}, {{0, 0, 1}});
  const Nfa all(1, 2, 0, {0}, {{0, 0, 0}, {0, 1, 0}});
  CHECK_FALSE(bounded_intersection_witness(Bundle({all, empty_final}), 8).has_value());
  CHECK(bounded_intersection_witness(Bundle({all, all, all}), 8) == Word{});

  const auto dfas = clique_to_dfas(example_clique_graph(), 4);
  CHECK(bounded_intersection_witness(Bundle(dfas), 4) == Word{0, 1, 3, 4});
  CHECK_FALSE(bounded_intersection_witness(Bundle(dfas), 3).has_value());
}

TEST_CASE("bounded witness equals exhaustive enumeration", "[oracle][property]") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    testing::BundleSpec spec;
    spec.k = 2 + seed % 2;
    spec.max_states = 3;
    spec.alphabet = 1 + seed % 2;
    spec.density = 0.3;
    spec.seed = seed;
    const Bundle b = testing::random_bundle(spec);
    std::optional<Word> first;
    for_each_word(spec.alphabet, 8, [&](const Word& w) {
      if (!first && all_accept(b, w)) first = w;
    });
    CHECK(bounded_intersection_witness(b, 8) == first);
  }
}

TEST_CASE("exhausted search proves emptiness", "[oracle]") {
  const Nfa a(2, 1, 0, {1}, {{0, 0, 1}});
  const Nfa b(1, 1, 0, {0}, {});
  const auto search = bounded_intersection_search(Bundle({a, b}), 100);
  CHECK_FALSE(search.witness.has_value());
  CHECK(search.exhausted);
}

TEST_CASE("interleaving identity holds extensionally", "[oracle][property]") {
  const Nfa a = random_nfa(3, 2, 0.5, 1);
  CHECK(check_interleaving_identity(Bundle({a, a, a}), 8));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    testing::BundleSpec spec;
    spec.seed = seed;
    spec.density = 0.4;
    CHECK(check_interleaving_identity(testing::random_bundle(spec), 8));
  }
  const Nfa only_a(2, 2, 0, {1}, {{0, 0, 1}});
  const Nfa only_b(2, 2, 0, {1}, {{0, 1, 1}});
  CHECK(check_interleaving_identity(Bundle({only_a, only_b}), 8));
}
