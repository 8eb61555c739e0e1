#include "nfai/decision.hpp"

#include <algorithm>
#include <unordered_map>

namespace nfai {

Word ProductRun::word() const {
  Word w;
  for (const Label l : labels) {
    if (l != kEpsilon) w.push_back(l);
  }
  return w;
}

Decision decide_over(const ProductSpace& space) {
  struct Parent {
    std::uint64_t code;
    Label label;
  };
  Decision d;
  std::unordered_map<std::uint64_t, Parent> parent;
  std::vector<std::uint64_t> queue{space.initial()};
  parent.emplace(space.initial(), Parent{space.initial(), kEpsilon});

  auto trace = [&](std::uint64_t last) {
    ProductRun run;
    for (std::uint64_t cur = last; cur != space.initial(); cur = parent.at(cur).code) {
      run.codes.push_back(cur);
      run.labels.push_back(parent.at(cur).label);
    }
    run.codes.push_back(space.initial());
    std::reverse(run.codes.begin(), run.codes.end());
    std::reverse(run.labels.begin(), run.labels.end());
    return run;
  };

  if (space.is_final(space.initial())) {
    d.empty = false;
    d.explored_states = 1;
    d.witness_run = trace(space.initial());
    return d;
  }

  std::vector<ProductEdge> edges;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t code = queue[head];
    space.successors(code, edges);
    d.explored_transitions += edges.size();
    for (const auto& e : edges) {
      if (!parent.try_emplace(e.dst, Parent{code, e.label}).second) continue;
      queue.push_back(e.dst);
      if (space.is_final(e.dst)) {
        d.empty = false;
        d.explored_states = queue.size();
        d.witness_run = trace(e.dst);
        return d;
      }
    }
  }
  d.explored_states = queue.size();
  return d;
}

Decision decide_empty(const Bundle& bundle) { return decide_over(NoddingSpace(bundle, false)); }

Decision decide_direct_baseline(const Bundle& bundle) { return decide_over(DirectSpace(bundle)); }

std::optional<std::string> validate_product_run(const ProductSpace& space, const ProductRun& run) {
  if (run.codes.size() != run.labels.size() + 1) return "code and label counts disagree";
  if (run.codes.front() != space.initial()) return "run does not start at the initial state";
  std::vector<ProductEdge> edges;
  for (std::size_t i = 0; i < run.labels.size(); ++i) {
    space.successors(run.codes[i], edges);
    const bool found = std::any_of(edges.begin(), edges.end(), [&](const ProductEdge& e) {
      return e.label == run.labels[i] && e.dst == run.codes[i + 1];
    });
    if (!found) return "step " + std::to_string(i) + " is not a product transition";
  }
  if (!space.is_final(run.codes.back())) return "run does not end in a final state";
  return std::nullopt;
}

}  // namespace nfai
