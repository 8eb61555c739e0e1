// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is 0 only if all criteria pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nfai/certificates.hpp"
#include "nfai/decision.hpp"
#include "nfai/hardness.hpp"
#include "nfai/oracle.hpp"
#include "nfai/products.hpp"
#include "nfai/relations.hpp"
#include "support/support.hpp"

using namespace nfai;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(what));
  }
  void require(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

constexpr std::size_t kCorpusSize = 300;
constexpr std::size_t kMaxWordLength = 8;

// Subset simulation over one automaton with sorted state vectors.
class SetSim {
 public:
  explicit SetSim(const AnyAutomaton& a) : a_(&a) {
    mark_.assign(std::visit([](const auto& x) { return x.n_states(); }, a), 0);
  }

  [[nodiscard]] std::vector<State> start() const {
    std::vector<State> s{std::visit([](const auto& x) { return x.initial(); }, *a_)};
    close(s);
    return s;
  }

  [[nodiscard]] std::vector<State> step(const std::vector<State>& s, Letter x) const {
    std::vector<State> next;
    std::visit(
        [&](const auto& a) {
          for (const State q : s) {
            for (const State p : a.successors(q, x)) {
              if (mark_[p] == 0) {
                mark_[p] = 1;
                next.push_back(p);
              }
            }
          }
        },
        *a_);
    for (const State p : next) mark_[p] = 0;
    close(next);
    return next;
  }

  [[nodiscard]] bool accepting(const std::vector<State>& s) const {
    return std::visit(
        [&](const auto& a) {
          return std::any_of(s.begin(), s.end(), [&](State q) { return a.is_final(q); });
        },
        *a_);
  }

 private:
  void close(std::vector<State>& s) const {
    const auto* e = std::get_if<EpsilonNfa>(a_);
    if (e == nullptr) return;
    for (const State q : s) mark_[q] = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (const State p : e->successors(s[i], kEpsilon)) {
        if (mark_[p] == 0) {
          mark_[p] = 1;
          s.push_back(p);
        }
      }
    }
    for (const State q : s) mark_[q] = 0;
  }

  const AnyAutomaton* a_;
  mutable std::vector<char> mark_;
};

std::uint64_t power(std::uint64_t base, std::uint64_t exp) { return saturating_pow(base, exp); }

std::uint64_t horizon(const Bundle& b) {
  std::uint64_t h = 1;
  for (const auto& a : b) h = saturating_mul(h, a.n_states());
  return h;
}

// ---------------------------------------------------------------------------
// Criteria 1 and 2

struct LanguageCheck {
  std::uint64_t words = 0;
  std::uint64_t bound_checks = 0;
};

void check_languages(std::size_t index, const Bundle& b, Outcome& lang, Outcome& bounds,
                     LanguageCheck& counts) {
  const std::size_t k = b.k();
  const std::size_t ell = b.alphabet_size();
  const std::uint64_t n = b.max_states();
  const std::uint64_t m = b.max_transitions();
  const std::uint64_t mk = m_leq_k(b);

  std::vector<AnyAutomaton> products;
  for (const auto c : kAllConstructions) products.push_back(full_product(c, b));
  auto states_of = [](const AnyAutomaton& a) {
    return std::visit([](const auto& x) -> std::uint64_t { return x.n_states(); }, a);
  };
  auto transitions_of = [](const AnyAutomaton& a) {
    return std::visit([](const auto& x) -> std::uint64_t { return x.num_transitions(); }, a);
  };
  const std::string tag = "bundle " + std::to_string(index) + ": ";
  auto check_bound = [&](std::uint64_t value, std::uint64_t bound, const std::string& what) {
    ++counts.bound_checks;
    bounds.require(value <= bound, tag + what + " " + std::to_string(value) + " > " +
                                       std::to_string(bound));
  };
  const std::uint64_t nk = power(n, k);
  const std::uint64_t nk1 = power(n, k - 1);
  const AnyAutomaton& nodding = products[1];
  const AnyAutomaton& catchup = products[3];
  const AnyAutomaton& leapfrog = products[4];
  check_bound(states_of(nodding), (k * ell - ell + 1) * nk, "nodding states");
  check_bound(transitions_of(nodding), k * m * nk1, "nodding transitions");
  check_bound(states_of(catchup), 2 * k * power(ell, k) * nk, "catch-up states");
  check_bound(transitions_of(catchup), 2 * k * power(ell, k) * mk * nk1, "catch-up transitions");
  check_bound(states_of(leapfrog), 2 * k * power(ell, k - 1) * nk, "leapfrog states");

  std::vector<SetSim> sims;
  for (const auto& p : products) sims.emplace_back(p);
  std::vector<AnyAutomaton> components;
  for (const auto& a : b) components.emplace_back(a);
  std::vector<SetSim> refs;
  for (const auto& a : components) refs.emplace_back(a);

  const SetSim& echo = sims[2];
  // Product sets (echoing entry holds the set after the k-stuttering), the
  // echoing set after u itself, and the component sets.
  struct Node {
    std::vector<std::vector<State>> product;
    std::vector<State> echo_plain;
    std::vector<std::vector<State>> refs;
  };
  Word w;
  std::function<void(const Node&)> visit = [&](const Node& node) {
    ++counts.words;
    bool expected = true;
    for (std::size_t i = 0; i < k; ++i) expected = expected && refs[i].accepting(node.refs[i]);
    for (std::size_t c = 0; c < products.size(); ++c) {
      const bool got = sims[c].accepting(node.product[c]);
      if (got != expected) {
        std::ostringstream s;
        s << tag << to_string(kAllConstructions[c]) << " disagrees on a word of length "
          << w.size();
        lang.fail(s.str());
      }
    }
    // The echoing product must reject u unless u is the stuttering of an
    // accepted word.
    if (echo.accepting(node.echo_plain)) {
      bool stutter = w.size() % k == 0;
      for (std::size_t j = 0; stutter && j < w.size(); ++j) stutter = w[j] == w[j - j % k];
      lang.require(stutter && oracle::all_accept(b, oracle::restriction(w, 0, k)),
                   tag + "echoing accepts a word that is not a k-stuttering of a common word");
    }
    if (w.size() == kMaxWordLength) return;
    for (Letter x = 0; x < ell; ++x) {
      Node next;
      for (std::size_t c = 0; c < products.size(); ++c) {
        if (c == 2) {
          std::vector<State> s = node.product[c];
          for (std::size_t r = 0; r < k; ++r) s = echo.step(s, x);
          next.product.push_back(std::move(s));
        } else {
          next.product.push_back(sims[c].step(node.product[c], x));
        }
      }
      next.echo_plain = echo.step(node.echo_plain, x);
      for (std::size_t i = 0; i < k; ++i) next.refs.push_back(refs[i].step(node.refs[i], x));
      w.push_back(x);
      visit(next);
      w.pop_back();
    }
  };
  Node root;
  for (const auto& s : sims) root.product.push_back(s.start());
  root.echo_plain = echo.start();
  for (const auto& r : refs) root.refs.push_back(r.start());
  visit(root);
}

// ---------------------------------------------------------------------------
// Clique instances shared by criteria 3 and 6

struct CliqueInstance {
  UndirectedGraph graph;
  std::size_t k;
};

UndirectedGraph graph_from_mask(std::size_t n, unsigned mask) {
  UndirectedGraph g(n);
  unsigned bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit & 1U) != 0) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<CliqueInstance> clique_instances() {
  std::vector<CliqueInstance> out;
  out.push_back({example_clique_graph(), 4});
  for (std::size_t n = 1; n <= 5; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (unsigned mask = 0; mask < (1U << pairs); ++mask) {
      for (std::size_t k = 3; k <= 5; ++k) out.push_back({graph_from_mask(n, mask), k});
    }
  }
  std::mt19937_64 rng(20240601);
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const double p = 0.2 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
    out.push_back({random_graph(n, p, rng()), 3 + rng() % 3});
  }
  return out;
}

// ---------------------------------------------------------------------------

bool check_decision(const Bundle& b, const std::string& tag, Outcome& o) {
  const Decision d = decide_empty(b);
  const Decision base = decide_direct_baseline(b);
  const auto expected = oracle::bounded_intersection_witness(b, horizon(b));
  o.require(d.empty == !expected.has_value(), tag + ": decide_empty disagrees with the oracle");
  o.require(base.empty == d.empty, tag + ": direct baseline disagrees");
  if (!d.empty) {
    const NoddingSpace space(b, false);
    o.require(!validate_product_run(space, *d.witness_run).has_value(),
              tag + ": witness run does not validate");
    o.require(oracle::all_accept(b, *d.witness()), tag + ": witness rejected by a component");
    const DirectSpace direct(b);
    o.require(!validate_product_run(direct, *base.witness_run).has_value() &&
                  oracle::all_accept(b, *base.witness()),
              tag + ": baseline witness invalid");
  }
  return d.empty;
}

// ---------------------------------------------------------------------------
// Certificate mutations

std::optional<std::string> mutate_pathset(const Bundle& b, ShortPathset ps, std::mt19937_64& rng) {
  std::vector<int> kinds;
  if (b.alphabet_size() > 1 && !ps.word.empty()) kinds.push_back(0);
  if (!ps.word.empty()) kinds.push_back(1);
  kinds.push_back(2);
  bool has_gap = false;
  for (std::size_t i = 0; i < b.k() && !ps.word.empty(); ++i) {
    has_gap = has_gap || b[i].n_states() > 1;
  }
  if (has_gap) kinds.push_back(3);
  switch (kinds[rng() % kinds.size()]) {
    case 0: {  // change one letter of the word
      const std::size_t j = rng() % ps.word.size();
      ps.word[j] = static_cast<Letter>((ps.word[j] + 1 + rng() % (b.alphabet_size() - 1)) %
                                       b.alphabet_size());
      break;
    }
    case 1:  // drop the last step of one run
      ps.runs[rng() % ps.runs.size()].steps.pop_back();
      break;
    case 2:  // lengthen the word by one letter
      ps.word.push_back(0);
      break;
    default: {  // redirect one step to a different state
      std::size_t i = rng() % b.k();
      while (b[i].n_states() < 2) i = (i + 1) % b.k();
      auto& step = ps.runs[i].steps[rng() % ps.runs[i].steps.size()];
      step.dst = static_cast<State>((step.dst + 1 + rng() % (b[i].n_states() - 1)) %
                                    b[i].n_states());
      break;
    }
  }
  const PathsetVerdict v = verify_short_pathset(b, ps);
  if (v.accepted()) return std::nullopt;
  return std::string(to_string(v.reason));
}

std::optional<std::string> mutate_cut(const Bundle& b, StaggeredCut cut, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> members;
  for (std::size_t s = 0; s < cut.sets.size(); ++s) {
    for (auto t = cut.sets[s].find_next(0); t; t = cut.sets[s].find_next(*t + 1)) {
      members.emplace_back(s, *t);
    }
  }
  if (members.empty()) return "no-bits";
  const auto [s, t] = members[rng() % members.size()];
  cut.sets[s].reset(t);
  const CutVerdict fast = verify_staggered_cut(b, cut);
  const CutVerdict slow = verify_staggered_cut_naive(b, cut);
  if (fast.accepted() || slow.accepted() || fast.violated != slow.violated) return std::nullopt;
  return "condition " + std::to_string(static_cast<int>(fast.violated));
}

std::vector<Nfa> all_two_state_unary() {
  std::vector<Nfa> out;
  for (unsigned rel = 0; rel < 16; ++rel) {
    std::vector<Transition> ts;
    for (unsigned bit = 0; bit < 4; ++bit) {
      if ((rel >> bit & 1U) != 0) ts.push_back({bit / 2, 0, bit % 2});
    }
    for (unsigned fin = 0; fin < 4; ++fin) {
      std::vector<State> finals;
      if ((fin & 1U) != 0) finals.push_back(0);
      if ((fin & 2U) != 0) finals.push_back(1);
      out.emplace_back(2, 1, 0, finals, ts);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Criteria

std::vector<Bundle> corpus() {
  std::vector<Bundle> out;
  out.reserve(kCorpusSize);
  for (std::size_t i = 0; i < kCorpusSize; ++i) out.push_back(testing::corpus_bundle(i));
  return out;
}

Outcome criterion_1_and_2(const std::vector<Bundle>& bundles, Outcome& bounds) {
  Outcome lang;
  LanguageCheck counts;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < bundles.size(); ++i) check_languages(i, bundles[i], lang, bounds, counts);
  const double secs = seconds_since(start);
  lang.require(secs < 120.0, "runtime " + std::to_string(secs) + " s exceeds 2 minutes");
  std::ostringstream d;
  d << bundles.size() << " bundles, " << counts.words << " words x 5 constructions, " << secs
    << " s";
  lang.detail = d.str();
  bounds.detail = std::to_string(counts.bound_checks) + " bound checks";
  return lang;
}

Outcome criterion_3(const std::vector<Bundle>& bundles, const std::vector<CliqueInstance>& cliques) {
  Outcome o;
  std::size_t empty = 0;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    empty += check_decision(bundles[i], "bundle " + std::to_string(i), o) ? 1 : 0;
  }
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const Bundle b(clique_to_dfas(cliques[i].graph, cliques[i].k));
    empty += check_decision(b, "clique instance " + std::to_string(i), o) ? 1 : 0;
  }
  o.detail = std::to_string(bundles.size() + cliques.size()) + " instances, " +
             std::to_string(empty) + " empty";
  return o;
}

Outcome criterion_4(const std::vector<Bundle>& bundles) {
  Outcome o;
  std::mt19937_64 rng(4);
  std::size_t cuts = 0;
  std::size_t pathsets = 0;
  std::vector<std::pair<std::size_t, Certificate>> valid;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    const Bundle& b = bundles[i];
    const std::string tag = "bundle " + std::to_string(i);
    const Decision d = decide_empty(b);
    if (d.empty) {
      ++cuts;
      const StaggeredCut cut = extract_staggered_cut(b);
      o.require(verify_staggered_cut(b, cut).accepted(), tag + ": matrix verifier rejects the cut");
      o.require(verify_staggered_cut_naive(b, cut).accepted(),
                tag + ": naive verifier rejects the cut");
      valid.emplace_back(i, cut);
    } else {
      ++pathsets;
      const ShortPathset ps = extract_short_pathset(b, d);
      o.require(ps.word.size() <= power(b.max_states(), b.k()), tag + ": pathset word too long");
      o.require(verify_short_pathset(b, ps).accepted(), tag + ": pathset rejected");
      valid.emplace_back(i, ps);
    }
  }

  // 200 mutations, alternating cut and pathset sources.
  std::vector<std::size_t> cut_ids;
  std::vector<std::size_t> path_ids;
  for (std::size_t v = 0; v < valid.size(); ++v) {
    const bool is_cut = std::holds_alternative<StaggeredCut>(valid[v].second);
    if (is_cut && std::get<StaggeredCut>(valid[v].second).sets.empty()) continue;
    (is_cut ? cut_ids : path_ids).push_back(v);
  }
  std::size_t rejected = 0;
  std::size_t mutations = 0;
  for (; mutations < 200; ++mutations) {
    const bool use_cut = mutations % 2 == 0 ? !cut_ids.empty() : path_ids.empty();
    const auto& ids = use_cut ? cut_ids : path_ids;
    const auto& [bi, cert] = valid[ids[rng() % ids.size()]];
    const auto reason = use_cut ? mutate_cut(bundles[bi], std::get<StaggeredCut>(cert), rng)
                                : mutate_pathset(bundles[bi], std::get<ShortPathset>(cert), rng);
    if (reason && *reason != "no-bits") {
      ++rejected;
    } else {
      o.fail("mutation " + std::to_string(mutations) + " of bundle " + std::to_string(bi) +
             " was accepted");
    }
  }

  // Soundness: no candidate cut certifies a non-empty 2-state unary pair.
  const auto automata = all_two_state_unary();
  std::size_t nonempty = 0;
  std::uint64_t candidates = 0;
  for (const auto& a0 : automata) {
    for (const auto& a1 : automata) {
      const Bundle b({a0, a1});
      if (decide_empty(b).empty) continue;
      ++nonempty;
      for (unsigned bits = 0; bits < 256; ++bits) {
        StaggeredCut cut = StaggeredCut::empty_for(b);
        for (unsigned t = 0; t < 4; ++t) {
          cut.at(0, 0).set(t, (bits >> t & 1U) != 0);
          cut.at(1, 0).set(t, (bits >> (4 + t) & 1U) != 0);
        }
        ++candidates;
        o.require(!verify_staggered_cut(b, cut).accepted(),
                  "a cut was accepted for a non-empty unary pair");
      }
    }
  }
  std::ostringstream d;
  d << cuts << " cuts, " << pathsets << " pathsets, " << rejected << "/" << mutations
    << " mutations rejected, " << candidates << " candidate cuts over " << nonempty
    << " non-empty unary pairs";
  o.detail = d.str();
  return o;
}

Outcome criterion_5() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::size_t accepted = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const Bundle b = testing::corpus_bundle(1000 + i);
    StaggeredCut cut;
    if (i % 3 == 0 && decide_empty(b).empty) {
      cut = extract_staggered_cut(b);
      if (i % 2 == 0 && !cut.sets.empty()) cut.sets[rng() % cut.sets.size()].flip(rng() % b.tuple_count());
    } else {
      cut = StaggeredCut::empty_for(b);
      std::bernoulli_distribution bit(0.3 + 0.1 * static_cast<double>(i % 7));
      for (auto& s : cut.sets) {
        for (std::size_t t = 0; t < s.size(); ++t) s.set(t, bit(rng));
      }
      if (i % 2 == 0) {
        for (Letter a = 1; a < b.alphabet_size(); ++a) cut.at(0, a) = cut.at(0, 0);
      }
    }
    const CutVerdict fast = verify_staggered_cut(b, cut);
    const CutVerdict slow = verify_staggered_cut_naive(b, cut);
    o.require(fast.accepted() == slow.accepted() && fast.violated == slow.violated,
              "verifiers disagree on pair " + std::to_string(i));
    accepted += fast.accepted() ? 1 : 0;
  }
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 1 + rng() % 64;
    const std::size_t m = 1 + rng() % 64;
    const std::size_t p = 1 + rng() % 64;
    const BoolMatrix a = testing::random_matrix(n, m, 0.3, rng);
    const BoolMatrix c = testing::random_matrix(m, p, 0.3, rng);
    const BoolMatrix expected = testing::triple_loop_multiply(a, c);
    o.require(multiply(a, c) == expected && multiply_rowwise(a, c) == expected &&
                  multiply_four_russians(a, c) == expected,
              "packed product differs from the triple loop in round " + std::to_string(round));
  }
  o.detail = "100 (bundle, cut) pairs (" + std::to_string(accepted) +
             " valid), 50 matrix products";
  return o;
}

Outcome criterion_6(const std::vector<CliqueInstance>& cliques) {
  Outcome o;
  {
    const auto dfas = clique_to_dfas(example_clique_graph(), 4);
    o.require(dfas.size() == 3, "example graph does not give three automata");
    for (const auto& a : dfas) o.require(a.is_deterministic(), "example automaton is not a DFA");
    const Decision d = decide_empty(Bundle(dfas));
    o.require(!d.empty && d.witness() == Word{0, 1, 3, 4},
              "example witness does not decode to the clique {1,2,4,5}");
  }
  std::size_t with_clique = 0;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const auto& [g, k] = cliques[i];
    const Decision d = decide_empty(Bundle(clique_to_dfas(g, k)));
    const bool clique = brute_force_has_clique(g, k);
    with_clique += clique ? 1 : 0;
    o.require(d.empty == !clique, "instance " + std::to_string(i) + ": emptiness != no clique");
    if (!d.empty) {
      const Word w = *d.witness();
      o.require(is_clique(g, std::vector<std::size_t>(w.begin(), w.end())) && w.size() == k,
                "instance " + std::to_string(i) + ": witness is not a k-clique");
    }
  }
  o.detail = std::to_string(cliques.size()) + " graphs, " + std::to_string(with_clique) +
             " with a clique";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  std::size_t rs_count = 0;
  std::size_t skipped = 0;
  std::size_t satisfiable = 0;
  for (std::uint64_t seed = 0; rs_count < 100; ++seed) {
    testing::BundleSpec spec;
    spec.k = 2 + seed % 2;
    spec.max_states = 3;
    spec.alphabet = 1 + seed % 2;
    spec.density = 0.3 + 0.1 * static_cast<double>(seed % 4);
    spec.seed = seed;
    RsInstance rs{testing::random_bundle(spec),
                  testing::random_multitape(spec.k, 1 + seed % 3, spec.alphabet, 0.25, seed + 1000)};
    const auto dist = testing::synchronized_rs_distance(rs);
    // Tuple enumeration is only complete when a solution, if any, fits the bound.
    if (dist && *dist > 8) {
      ++skipped;
      continue;
    }
    ++rs_count;
    const bool brute = testing::brute_force_rs(rs, 8);
    satisfiable += brute ? 1 : 0;
    o.require(decide_rs(rs) == brute, "decide_rs disagrees with enumeration, seed " +
                                          std::to_string(seed));
    o.require(decide_empty(rs_to_ie(rs)).empty == !brute,
              "rs_to_ie changes the answer, seed " + std::to_string(seed));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    testing::BundleSpec spec;
    spec.k = 3 + seed % 2;
    spec.max_states = 3;
    spec.alphabet = 1 + seed % 3;
    spec.density = 0.3 + 0.2 * static_cast<double>(seed % 3);
    spec.seed = 5000 + seed;
    const Bundle b = testing::random_bundle(spec);
    const bool nonempty = !decide_empty(b).empty;
    const RsInstance rs = ie_to_rs(b);
    o.require(testing::synchronized_rs_distance(rs).has_value() == nonempty,
              "ie_to_rs changes the answer, seed " + std::to_string(seed));
    o.require(decide_rs(rs) == nonempty, "decide_rs after ie_to_rs differs, seed " +
                                             std::to_string(seed));
    o.require(decide_empty(rs_to_ie(rs)).empty == !nonempty,
              "round trip changes the answer, seed " + std::to_string(seed));
  }
  o.detail = std::to_string(rs_count) + " RS instances (" + std::to_string(satisfiable) +
             " satisfiable, " + std::to_string(skipped) +
             " skipped with shortest solution > 8), 100 IE round trips";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const auto start = Clock::now();
  const Nfa complete = random_nfa(40, 2, 1.0, 8);
  o.require(complete.num_transitions() == 3200, "instance is not the complete relation");
  const Bundle b({complete, complete});

  const DirectSpace direct(b);
  const auto t0 = Clock::now();
  const ExploreCounts direct_counts = explore(direct);
  const double direct_secs = seconds_since(t0);
  const std::uint64_t direct_total = count_transitions(direct);

  const NoddingSpace nodding(b, false);
  const auto t1 = Clock::now();
  const ExploreCounts nodding_counts = explore(nodding);
  const double nodding_secs = seconds_since(t1);

  o.require(direct_counts.transitions == 5'120'000 && direct_total == 5'120'000,
            "direct product has " + std::to_string(direct_counts.transitions) + " transitions");
  o.require(nodding_counts.transitions <= 256'000,
            "nodding accessible part has " + std::to_string(nodding_counts.transitions) +
                " transitions");
  o.require(direct_counts.transitions >= 20 * nodding_counts.transitions, "reduction below 20x");
  const double secs = seconds_since(start);
  o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s exceeds 1 minute");
  std::ostringstream d;
  d << "direct " << direct_counts.transitions << " transitions (" << direct_secs * 1e3
    << " ms), nodding " << nodding_counts.transitions << " (" << nodding_secs * 1e3 << " ms), "
    << static_cast<double>(direct_counts.transitions) / static_cast<double>(nodding_counts.transitions)
    << "x";
  o.detail = d.str();
  return o;
}

void report(int number, const std::string& name, const Outcome& o, bool& all) {
  std::printf("criterion %d %-42s %s  %s\n", number, name.c_str(), o.pass ? "PASS" : "FAIL",
              o.detail.c_str());
  for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  all = all && o.pass;
}

}  // namespace

int main() {
  bool all = true;
  try {
    const std::vector<Bundle> bundles = corpus();
    const std::vector<CliqueInstance> cliques = clique_instances();

    Outcome bounds;
    const Outcome languages = criterion_1_and_2(bundles, bounds);
    report(1, "bounded-language equivalence", languages, all);
    report(2, "size bounds", bounds, all);
    report(3, "decision correctness", criterion_3(bundles, cliques), all);
    report(4, "certificate duality and soundness", criterion_4(bundles), all);
    report(5, "matrix verifier equivalence", criterion_5(), all);
    report(6, "clique reduction", criterion_6(cliques), all);
    report(7, "relation-satisfaction reductions", criterion_7(), all);
    report(8, "sparse-vs-dense separation", criterion_8(), all);
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 1;
  }
  return all ? 0 : 1;
}
