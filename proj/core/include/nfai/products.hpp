#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nfai/automaton.hpp"
#include "nfai/bool_matrix.hpp"
#include "nfai/bundle.hpp"
#include "nfai/product_space.hpp"

namespace nfai {

/// Thrown when a full materialization would exceed the state budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t requested, std::uint64_t budget)
      : std::runtime_error("product needs " + std::to_string(requested) +
                           " states, budget is " + std::to_string(budget)),
        requested_(requested),
        budget_(budget) {}
  [[nodiscard]] std::uint64_t requested() const noexcept { return requested_; }
  [[nodiscard]] std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultStateBudget = 10'000'000;

/// kDefaultStateBudget, or the value of NFAI_STATE_BUDGET when it parses.
std::uint64_t default_state_budget();

struct ReachRelation {
  Word word;
  BoolMatrix matrix;
};

/// Delta(u_0) * ... * Delta(u_{t-1}); the identity for the empty word.
ReachRelation reach_relation(const Nfa& a, std::span<const Letter> u);

/// max over components i and words u with |u| <= k of |Delta_i^u|.
std::size_t m_leq_k(const Bundle& bundle);

struct SizeBound {
  std::uint64_t states = 0;
  std::uint64_t transitions = 0;
};

/// Worst-case state and transition counts for a construction, with n and m
/// the largest component state and transition counts. Saturates at
/// UINT64_MAX. The direct product has no useful transition bound below m^k;
/// that value is reported.
SizeBound size_bound(Construction c, const Bundle& bundle, std::size_t m_leq_k_value);

struct SparsityStats {
  Construction construction = Construction::direct;
  std::size_t k = 0;
  std::size_t alphabet = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t states_total = 0;
  std::uint64_t states_accessible = 0;
  /// Only known when the full product fitted the state budget.
  std::optional<std::uint64_t> transitions_total;
  std::uint64_t transitions_accessible = 0;
  std::size_t m_leq_k = 0;
};

/// `construction,k,l,n,m,states_acc,trans_acc,m_leq_k`
std::string stats_csv_header();
std::string stats_csv_row(const SparsityStats& stats);

/// Every code of the space becomes a state with the same number.
/// Throws BudgetExceeded when layout().size() > budget.
AnyAutomaton materialize(const ProductSpace& space, std::uint64_t budget);

Nfa direct_product(const Bundle& bundle, std::uint64_t budget = default_state_budget());
EpsilonNfa nodding_product(const Bundle& bundle, std::uint64_t budget = default_state_budget());
Nfa echoing_product(const Bundle& bundle, std::uint64_t budget = default_state_budget());
Nfa catchup_product(const Bundle& bundle, std::uint64_t budget = default_state_budget());
Nfa leapfrog_product(const Bundle& bundle, std::uint64_t budget = default_state_budget());

/// Full product for any construction: an EpsilonNfa for nodding, an Nfa
/// otherwise.
AnyAutomaton full_product(Construction c, const Bundle& bundle,
                          std::uint64_t budget = default_state_budget());

/// Number of transitions of the full product, enumerated without storing
/// them.
std::uint64_t count_transitions(const ProductSpace& space);

struct AccessiblePart {
  AnyAutomaton automaton;
  /// codes[q] is the product code of accessible state q, in BFS order.
  std::vector<std::uint64_t> codes;
  SparsityStats stats;
};

/// Breadth-first construction of the states reachable from the initial
/// product state. Throws BudgetExceeded if more than `budget` states are
/// discovered.
AccessiblePart accessible_part(Construction c, const Bundle& bundle,
                               std::uint64_t budget = default_state_budget());

struct ExploreCounts {
  std::uint64_t states = 0;
  std::uint64_t transitions = 0;
  bool any_final = false;
};

/// Counts the accessible part without building it.
ExploreCounts explore(const ProductSpace& space);

}  // namespace nfai
