#include "nfai/products.hpp"

#include <charconv>
#include <cstdlib>
#include <deque>
#include <limits>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace nfai {

namespace {

std::uint64_t sat_product(std::initializer_list<std::uint64_t> factors) {
  std::uint64_t r = 1;
  for (const auto f : factors) r = saturating_mul(r, f);
  return r;
}

template <bool Eps>
BasicAutomaton<Eps> build(std::size_t n_states, const Bundle& bundle, State initial,
                          std::vector<State> finals, std::vector<Transition> transitions) {
  BasicAutomaton<Eps> a(n_states, bundle.alphabet_size(), initial, std::move(finals),
                        std::move(transitions));
  a.set_letter_names(bundle[0].letter_names());
  return a;
}

AnyAutomaton build_any(const ProductSpace& space, std::size_t n_states, State initial,
                       std::vector<State> finals, std::vector<Transition> transitions) {
  if (space.has_epsilon()) {
    return build<true>(n_states, space.bundle(), initial, std::move(finals),
                       std::move(transitions));
  }
  return build<false>(n_states, space.bundle(), initial, std::move(finals),
                      std::move(transitions));
}

// Visited set that is dense for small spaces and hashed otherwise.
class VisitedSet {
 public:
  explicit VisitedSet(std::uint64_t universe) {
    if (universe <= (std::uint64_t{1} << 28)) dense_ = BitVector(universe);
  }
  bool insert(std::uint64_t code) {
    if (dense_) {
      if (dense_->test(code)) return false;
      dense_->set(code);
      return true;
    }
    return sparse_.insert(code).second;
  }

 private:
  std::optional<BitVector> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

}  // namespace

std::uint64_t default_state_budget() {
  if (const char* env = std::getenv("NFAI_STATE_BUDGET")) {
    std::uint64_t value = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0) return value;
  }
  return kDefaultStateBudget;
}

ReachRelation reach_relation(const Nfa& a, std::span<const Letter> u) {
  BoolMatrix m = BoolMatrix::identity(a.n_states());
  for (const Letter x : u) {
    if (x >= a.alphabet_size()) throw InputError("letter out of range in reach_relation");
    m = multiply(m, adjacency_matrix(a, x));
  }
  return {Word(u.begin(), u.end()), std::move(m)};
}

std::size_t m_leq_k(const Bundle& bundle) {
  std::size_t best = 0;
  for (const auto& a : bundle) {
    best = std::max(best, ReachTable(a, bundle.k()).max_relation_size());
  }
  return best;
}

SizeBound size_bound(Construction c, const Bundle& bundle, std::size_t m_leq_k_value) {
  const std::uint64_t k = bundle.k();
  const std::uint64_t ell = bundle.alphabet_size();
  const std::uint64_t n = bundle.max_states();
  const std::uint64_t m = bundle.max_transitions();
  const std::uint64_t nk = saturating_pow(n, k);
  const std::uint64_t nk1 = saturating_pow(n, k - 1);
  switch (c) {
    case Construction::direct:
      return {nk, saturating_pow(m, k)};
    case Construction::nodding:
    case Construction::echoing:
      return {sat_product({k * ell - ell + 1, nk}), sat_product({k, m, nk1})};
    case Construction::catchup:
      return {sat_product({2, k, saturating_pow(ell, k), nk}),
              sat_product({2, k, saturating_pow(ell, k), m_leq_k_value, nk1})};
    case Construction::leapfrog:
      return {sat_product({2, k, saturating_pow(ell, k - 1), nk}),
              sat_product({2, k, saturating_pow(ell, k), m_leq_k_value, nk1})};
  }
  return {};
}

std::string stats_csv_header() { return "construction,k,l,n,m,states_acc,trans_acc,m_leq_k"; }

std::string stats_csv_row(const SparsityStats& s) {
  std::ostringstream out;
  out << to_string(s.construction) << ',' << s.k << ',' << s.alphabet << ',' << s.n << ','
      << s.m << ',' << s.states_accessible << ',' << s.transitions_accessible << ','
      << s.m_leq_k;
  return out.str();
}

AnyAutomaton materialize(const ProductSpace& space, std::uint64_t budget) {
  const std::uint64_t size = space.layout().size();
  if (size > budget) throw BudgetExceeded(size, budget);
  if (size > std::numeric_limits<State>::max()) throw BudgetExceeded(size, std::numeric_limits<State>::max());
  std::vector<State> finals;
  std::vector<Transition> transitions;
  std::vector<ProductEdge> edges;
  for (std::uint64_t code = 0; code < size; ++code) {
    if (space.is_final(code)) finals.push_back(static_cast<State>(code));
    space.successors(code, edges);
    for (const auto& e : edges) {
      transitions.push_back({static_cast<State>(code), e.label, static_cast<State>(e.dst)});
    }
  }
  return build_any(space, size, static_cast<State>(space.initial()), std::move(finals),
                   std::move(transitions));
}

AnyAutomaton full_product(Construction c, const Bundle& bundle, std::uint64_t budget) {
  return materialize(*make_product_space(c, bundle), budget);
}

Nfa direct_product(const Bundle& bundle, std::uint64_t budget) {
  return std::get<Nfa>(full_product(Construction::direct, bundle, budget));
}

EpsilonNfa nodding_product(const Bundle& bundle, std::uint64_t budget) {
  return std::get<EpsilonNfa>(full_product(Construction::nodding, bundle, budget));
}

Nfa echoing_product(const Bundle& bundle, std::uint64_t budget) {
  return std::get<Nfa>(full_product(Construction::echoing, bundle, budget));
}

Nfa catchup_product(const Bundle& bundle, std::uint64_t budget) {
  return std::get<Nfa>(full_product(Construction::catchup, bundle, budget));
}

Nfa leapfrog_product(const Bundle& bundle, std::uint64_t budget) {
  return std::get<Nfa>(full_product(Construction::leapfrog, bundle, budget));
}

std::uint64_t count_transitions(const ProductSpace& space) {
  std::uint64_t total = 0;
  std::vector<ProductEdge> edges;
  for (std::uint64_t code = 0; code < space.layout().size(); ++code) {
    space.successors(code, edges);
    total += edges.size();
  }
  return total;
}

AccessiblePart accessible_part(Construction c, const Bundle& bundle, std::uint64_t budget) {
  const auto space = make_product_space(c, bundle);
  std::unordered_map<std::uint64_t, State> index;
  std::vector<std::uint64_t> codes{space->initial()};
  index.emplace(space->initial(), 0);
  std::vector<State> finals;
  std::vector<Transition> transitions;
  std::vector<ProductEdge> edges;

  for (std::size_t head = 0; head < codes.size(); ++head) {
    const std::uint64_t code = codes[head];
    if (space->is_final(code)) finals.push_back(static_cast<State>(head));
    space->successors(code, edges);
    for (const auto& e : edges) {
      auto [it, fresh] = index.try_emplace(e.dst, static_cast<State>(codes.size()));
      if (fresh) {
        if (codes.size() >= budget) throw BudgetExceeded(codes.size() + 1, budget);
        codes.push_back(e.dst);
      }
      transitions.push_back({static_cast<State>(head), e.label, it->second});
    }
  }

  SparsityStats stats;
  stats.construction = c;
  stats.k = bundle.k();
  stats.alphabet = bundle.alphabet_size();
  stats.n = bundle.max_states();
  stats.m = bundle.max_transitions();
  stats.states_total = space->layout().size();
  stats.states_accessible = codes.size();
  stats.transitions_accessible = transitions.size();
  if (stats.states_total <= budget) stats.transitions_total = count_transitions(*space);
  stats.m_leq_k = m_leq_k(bundle);

  const std::size_t n_states = codes.size();
  return {build_any(*space, n_states, 0, std::move(finals), std::move(transitions)),
          std::move(codes), stats};
}

ExploreCounts explore(const ProductSpace& space) {
  ExploreCounts counts;
  VisitedSet visited(space.layout().size());
  std::deque<std::uint64_t> queue{space.initial()};
  visited.insert(space.initial());
  std::vector<ProductEdge> edges;
  while (!queue.empty()) {
    const std::uint64_t code = queue.front();
    queue.pop_front();
    ++counts.states;
    counts.any_final = counts.any_final || space.is_final(code);
    space.successors(code, edges);
    counts.transitions += edges.size();
    for (const auto& e : edges) {
      if (visited.insert(e.dst)) queue.push_back(e.dst);
    }
  }
  return counts;
}

}  // namespace nfai
