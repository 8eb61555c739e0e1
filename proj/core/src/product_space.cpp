#include "nfai/product_space.hpp"

#include <algorithm>
#include <limits>

namespace nfai {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

Word word_letters(std::size_t ell, std::size_t len, std::uint64_t index) {
  Word w(len, 0);
  for (std::size_t j = len; j > 0; --j) {
    w[j - 1] = static_cast<Letter>(index % ell);
    index /= ell;
  }
  return w;
}

std::string word_name(const Word& w) {
  if (w.empty()) return "eps";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += '.';
    s += std::to_string(w[i]);
  }
  return s;
}

std::vector<ReachTable> build_reach_tables(const Bundle& bundle, std::size_t max_len) {
  std::vector<ReachTable> tables;
  tables.reserve(bundle.k());
  for (const auto& a : bundle) tables.emplace_back(a, max_len);
  return tables;
}

}  // namespace

std::string_view to_string(Construction c) noexcept {
  switch (c) {
    case Construction::direct:
      return "direct";
    case Construction::nodding:
      return "nodding";
    case Construction::echoing:
      return "echoing";
    case Construction::catchup:
      return "catchup";
    case Construction::leapfrog:
      return "leapfrog";
  }
  return "unknown";
}

std::optional<Construction> parse_construction(std::string_view name) noexcept {
  for (const auto c : kAllConstructions) {
    if (to_string(c) == name) return c;
  }
  if (name == "catch-up") return Construction::catchup;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// ProductLayout

ProductLayout::ProductLayout(std::vector<std::size_t> component_sizes, std::uint64_t tag_count)
    : sizes_(std::move(component_sizes)), tag_count_(tag_count) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  strides_.reserve(sizes_.size());
  tuple_count_ = 1;
  for (const auto n : sizes_) {
    if (n == 0) throw InputError("product component with no states");
    strides_.push_back(tuple_count_);
    if (tuple_count_ > kMax / n) throw InputError("product state space overflows 64 bits");
    tuple_count_ *= n;
  }
  if (tag_count_ == 0) throw InputError("product needs at least one copy");
  if (tuple_count_ > kMax / tag_count_) throw InputError("product state space overflows 64 bits");
}

std::uint64_t ProductLayout::encode(const ProductStateId& id) const {
  if (id.components.size() != sizes_.size()) {
    throw InputError("product state has " + std::to_string(id.components.size()) +
                     " components, layout expects " + std::to_string(sizes_.size()));
  }
  if (id.tag >= tag_count_) throw InputError("copy tag out of range");
  return compose(id.tag, tuple_index(id.components));
}

ProductStateId ProductLayout::decode(std::uint64_t code) const {
  if (code >= size()) throw InputError("product code out of range");
  ProductStateId id;
  id.components.resize(sizes_.size());
  decode_tuple(tuple_of(code), id.components);
  id.tag = tag_of(code);
  return id;
}

std::uint64_t ProductLayout::tuple_index(std::span<const State> components) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (components[i] >= sizes_[i]) throw InputError("product component state out of range");
    index += components[i] * strides_[i];
  }
  return index;
}

void ProductLayout::decode_tuple(std::uint64_t tuple, std::span<State> out) const {
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    out[i] = static_cast<State>(tuple % sizes_[i]);
    tuple /= sizes_[i];
  }
}

// ---------------------------------------------------------------------------
// ReachTable

ReachTable::ReachTable(const Nfa& a, std::size_t max_len)
    : n_(a.n_states()), ell_(a.alphabet_size()), max_len_(max_len) {
  len_offset_.assign(max_len_ + 2, 0);
  for (std::size_t t = 0; t <= max_len_; ++t) len_offset_[t + 1] = len_offset_[t] + ipow(ell_, t);
  const std::size_t total = len_offset_.back();

  std::vector<BoolMatrix> adjacency;
  adjacency.reserve(ell_);
  for (Letter x = 0; x < ell_; ++x) adjacency.push_back(adjacency_matrix(a, x));

  BitVector final_mask(n_);
  for (const State f : a.finals()) final_mask.set(f);

  relations_.reserve(total);
  relations_.push_back(BoolMatrix::identity(n_));
  for (std::size_t t = 1; t <= max_len_; ++t) {
    const std::uint64_t count = ipow(ell_, t);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const BoolMatrix& prefix = relations_[slot(t - 1, idx / ell_)];
      relations_.push_back(multiply(prefix, adjacency[idx % ell_]));
    }
  }

  reach_final_.reserve(total);
  offsets_.assign(total * n_ + 1, 0);
  for (std::size_t s = 0; s < total; ++s) {
    const BoolMatrix& rel = relations_[s];
    max_size_ = std::max(max_size_, rel.count());
    BitVector hits(n_);
    for (State q = 0; q < n_; ++q) {
      const auto row = rel.row(q);
      const auto mask = final_mask.words();
      for (std::size_t w = 0; w < row.size(); ++w) {
        if ((row[w] & mask[w]) != 0) {
          hits.set(q);
          break;
        }
      }
      for (State p = 0; p < n_; ++p) {
        if (rel.get(q, p)) targets_.push_back(p);
      }
      offsets_[s * n_ + q + 1] = targets_.size();
    }
    reach_final_.push_back(std::move(hits));
  }
}

std::size_t ReachTable::slot(std::size_t len, std::uint64_t index) const {
  if (len > max_len_) throw InputError("reach table queried beyond its word length");
  return static_cast<std::size_t>(len_offset_[len] + index);
}

std::uint64_t ReachTable::word_index(std::span<const Letter> u) const {
  std::uint64_t index = 0;
  for (const Letter x : u) {
    if (x >= ell_) throw InputError("letter out of range in reach-table word");
    index = index * ell_ + x;
  }
  return index;
}

const BoolMatrix& ReachTable::relation(std::size_t len, std::uint64_t index) const {
  return relations_.at(slot(len, index));
}

std::span<const State> ReachTable::successors(std::size_t len, std::uint64_t index,
                                              State q) const {
  const std::size_t s = slot(len, index) * n_ + q;
  return {targets_.data() + offsets_[s], offsets_[s + 1] - offsets_[s]};
}

bool ReachTable::reaches_final(std::size_t len, std::uint64_t index, State q) const {
  return reach_final_[slot(len, index)].test(q);
}

// ---------------------------------------------------------------------------
// ProductSpace

ProductSpace::ProductSpace(Construction c, const Bundle& bundle, std::uint64_t tag_count)
    : construction_(c), bundle_(&bundle), layout_(bundle.state_counts(), tag_count) {
  std::vector<State> init;
  init.reserve(bundle.k());
  for (const auto& a : bundle) init.push_back(a.initial());
  initial_ = layout_.compose(0, layout_.tuple_index(init));
}

bool ProductSpace::base_tuple_final(std::uint64_t tuple) const {
  for (std::size_t i = 0; i < layout_.k(); ++i) {
    const auto n = layout_.component_size(i);
    if (!(*bundle_)[i].is_final(static_cast<State>(tuple % n))) return false;
    tuple /= n;
  }
  return true;
}

// ---------------------------------------------------------------------------
// DirectSpace

DirectSpace::DirectSpace(const Bundle& bundle) : ProductSpace(Construction::direct, bundle, 1) {}

bool DirectSpace::is_final(std::uint64_t code) const { return base_tuple_final(code); }

void DirectSpace::successors(std::uint64_t code, std::vector<ProductEdge>& out) const {
  out.clear();
  const std::size_t k = layout_.k();
  std::vector<std::span<const State>> lists(k);
  std::vector<std::size_t> cursor(k);
  for (Letter a = 0; a < bundle_->alphabet_size(); ++a) {
    bool dead = false;
    for (std::size_t i = 0; i < k && !dead; ++i) {
      lists[i] = (*bundle_)[i].successors(layout_.component_of(code, i), a);
      dead = lists[i].empty();
    }
    if (dead) continue;
    std::fill(cursor.begin(), cursor.end(), 0);
    while (true) {
      std::uint64_t dst = 0;
      for (std::size_t i = 0; i < k; ++i) dst += lists[i][cursor[i]] * layout_.stride(i);
      out.push_back({a, dst});
      // Odometer with component k-1 as the fastest digit.
      std::size_t i = k;
      while (i > 0 && ++cursor[i - 1] == lists[i - 1].size()) {
        cursor[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
}

std::string DirectSpace::tag_name(std::uint64_t) const { return "base"; }

// ---------------------------------------------------------------------------
// NoddingSpace

NoddingSpace::NoddingSpace(const Bundle& bundle, bool echoing)
    : ProductSpace(echoing ? Construction::echoing : Construction::nodding, bundle,
                   1 + static_cast<std::uint64_t>(bundle.k() - 1) * bundle.alphabet_size()),
      echoing_(echoing) {}

bool NoddingSpace::is_final(std::uint64_t code) const {
  return layout_.tag_of(code) == 0 && base_tuple_final(layout_.tuple_of(code));
}

void NoddingSpace::successors(std::uint64_t code, std::vector<ProductEdge>& out) const {
  out.clear();
  const std::uint64_t tag = layout_.tag_of(code);
  const std::uint64_t tuple = layout_.tuple_of(code);
  const std::size_t k = layout_.k();
  if (tag == 0) {
    const State q = layout_.component_of(code, 0);
    const std::uint64_t rest = tuple - q * layout_.stride(0);
    for (Letter a = 0; a < bundle_->alphabet_size(); ++a) {
      for (const State p : (*bundle_)[0].successors(q, a)) {
        out.push_back({a, layout_.compose(petal_tag(1, a), rest + p * layout_.stride(0))});
      }
    }
    return;
  }
  const std::size_t i = volley_of(tag);
  const Letter a = letter_of(tag);
  const std::uint64_t next_tag = i + 1 == k ? 0 : petal_tag(i + 1, a);
  const Label label = echoing_ ? a : kEpsilon;
  const State q = layout_.component_of(code, i);
  const std::uint64_t rest = tuple - q * layout_.stride(i);
  for (const State p : (*bundle_)[i].successors(q, a)) {
    out.push_back({label, layout_.compose(next_tag, rest + p * layout_.stride(i))});
  }
}

std::string NoddingSpace::tag_name(std::uint64_t tag) const {
  if (tag == 0) return "base";
  return "(" + std::to_string(volley_of(tag)) + "," + std::to_string(letter_of(tag)) + ")";
}

// ---------------------------------------------------------------------------
// CatchupSpace

namespace {

std::uint64_t catchup_tag_count(const Bundle& bundle) {
  const std::size_t k = bundle.k();
  const std::size_t ell = bundle.alphabet_size();
  std::uint64_t count = 1 + ipow(ell, k) * (k - 1);
  for (std::size_t t = 1; t < k; ++t) count += ipow(ell, t) * t;
  return count;
}

}  // namespace

CatchupSpace::CatchupSpace(const Bundle& bundle)
    : ProductSpace(Construction::catchup, bundle, catchup_tag_count(bundle)),
      reach_(build_reach_tables(bundle, bundle.k())) {
  const std::size_t k = bundle.k();
  const std::size_t ell = bundle.alphabet_size();
  words_k_ = ipow(ell, k);

  tags_.reserve(layout_.tag_count());
  tags_.push_back({Kind::base, 0, 0, 0, {}});
  for (std::uint64_t w = 0; w < words_k_; ++w) {
    const Word letters = word_letters(ell, k, w);
    for (std::size_t pos = 1; pos < k; ++pos) tags_.push_back({Kind::petal, k, w, pos, letters});
  }
  tail_offset_.assign(k, 0);
  for (std::size_t t = 1; t < k; ++t) {
    tail_offset_[t] = tags_.size();
    for (std::uint64_t w = 0; w < ipow(ell, t); ++w) {
      const Word letters = word_letters(ell, t, w);
      for (std::size_t pos = 1; pos <= t; ++pos) tags_.push_back({Kind::tail, t, w, pos, letters});
    }
  }
}

std::uint64_t CatchupSpace::petal_tag(std::uint64_t word, std::size_t position) const {
  return 1 + word * (layout_.k() - 1) + (position - 1);
}

std::uint64_t CatchupSpace::tail_tag(std::size_t len, std::uint64_t word,
                                     std::size_t position) const {
  return tail_offset_[len] + word * len + (position - 1);
}

bool CatchupSpace::is_final(std::uint64_t code) const {
  const TagInfo& info = tags_[layout_.tag_of(code)];
  if (info.kind == Kind::base) return base_tuple_final(layout_.tuple_of(code));
  if (info.kind == Kind::petal || info.position != info.len) return false;
  // Tail end: components 0..t-1 have read v and must be final; the others
  // still have to read v.
  for (std::size_t j = 0; j < layout_.k(); ++j) {
    const State q = layout_.component_of(code, j);
    const bool ok = j < info.len ? (*bundle_)[j].is_final(q)
                                 : reach_[j].reaches_final(info.len, info.word, q);
    if (!ok) return false;
  }
  return true;
}

void CatchupSpace::successors(std::uint64_t code, std::vector<ProductEdge>& out) const {
  out.clear();
  const std::size_t k = layout_.k();
  const std::uint64_t tuple = layout_.tuple_of(code);
  const TagInfo& info = tags_[layout_.tag_of(code)];

  auto advance = [&](std::size_t component, std::size_t len, std::uint64_t word, Label label,
                     std::uint64_t next_tag) {
    const State q = layout_.component_of(code, component);
    const std::uint64_t rest = tuple - q * layout_.stride(component);
    for (const State p : reach_[component].successors(len, word, q)) {
      out.push_back({label, layout_.compose(next_tag, rest + p * layout_.stride(component))});
    }
  };

  switch (info.kind) {
    case Kind::base:
      for (std::uint64_t w = 0; w < words_k_; ++w) {
        advance(0, k, w, tags_[petal_tag(w, 1)].letters[0], petal_tag(w, 1));
      }
      for (std::size_t t = 1; t < k; ++t) {
        for (std::uint64_t w = 0; w < ipow(bundle_->alphabet_size(), t); ++w) {
          const std::uint64_t next = tail_tag(t, w, 1);
          advance(0, t, w, tags_[next].letters[0], next);
        }
      }
      break;
    case Kind::petal: {
      const std::size_t i = info.position;
      const std::uint64_t next = i + 1 == k ? 0 : petal_tag(info.word, i + 1);
      advance(i, k, info.word, info.letters[i], next);
      break;
    }
    case Kind::tail: {
      const std::size_t j = info.position;
      if (j < info.len) advance(j, info.len, info.word, info.letters[j], tail_tag(info.len, info.word, j + 1));
      break;
    }
  }
}

std::string CatchupSpace::tag_name(std::uint64_t tag) const {
  const TagInfo& info = tags_.at(tag);
  switch (info.kind) {
    case Kind::base:
      return "base";
    case Kind::petal:
      return "petal(" + word_name(info.letters) + "," + std::to_string(info.position) + ")";
    case Kind::tail:
      return "tail(" + word_name(info.letters) + "," + std::to_string(info.position) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// LeapfrogSpace

namespace {

std::uint64_t leapfrog_tag_count(const Bundle& bundle) {
  const std::size_t k = bundle.k();
  const std::size_t ell = bundle.alphabet_size();
  std::uint64_t count = k * ipow(ell, k - 1);
  for (std::size_t t = 0; t + 2 <= k; ++t) count += ipow(ell, t);
  return count;
}

}  // namespace

LeapfrogSpace::LeapfrogSpace(const Bundle& bundle)
    : ProductSpace(Construction::leapfrog, bundle, leapfrog_tag_count(bundle)),
      reach_(build_reach_tables(bundle, bundle.k())) {
  const std::size_t k = bundle.k();
  const std::size_t ell = bundle.alphabet_size();
  words_km1_ = ipow(ell, k - 1);

  tags_.reserve(layout_.tag_count());
  init_offset_.assign(k - 1, 0);
  for (std::size_t t = 0; t + 2 <= k; ++t) {
    init_offset_[t] = tags_.size();
    for (std::uint64_t w = 0; w < ipow(ell, t); ++w) {
      tags_.push_back({false, 0, w, word_letters(ell, t, w)});
    }
  }
  main_offset_ = tags_.size();
  for (std::size_t behind = 0; behind < k; ++behind) {
    for (std::uint64_t w = 0; w < words_km1_; ++w) {
      tags_.push_back({true, behind, w, word_letters(ell, k - 1, w)});
    }
  }
}

std::uint64_t LeapfrogSpace::init_tag(std::size_t len, std::uint64_t word) const {
  return init_offset_[len] + word;
}

std::uint64_t LeapfrogSpace::main_tag(std::size_t behind, std::uint64_t word) const {
  return main_offset_ + behind * words_km1_ + word;
}

bool LeapfrogSpace::is_final(std::uint64_t code) const {
  const std::size_t k = layout_.k();
  const std::size_t ell = bundle_->alphabet_size();
  const TagInfo& info = tags_[layout_.tag_of(code)];
  const std::size_t t = info.letters.size();
  for (std::size_t j = 0; j < k; ++j) {
    // Letters of u that component j has not consumed yet.
    std::size_t pending = 0;
    if (info.main) {
      pending = (info.behind + 2 * k - 1 - j) % k;
    } else {
      pending = j < t ? t - (j + 1) : t;
    }
    const std::uint64_t suffix = info.word % ipow(ell, pending);
    if (!reach_[j].reaches_final(pending, suffix, layout_.component_of(code, j))) return false;
  }
  return true;
}

void LeapfrogSpace::successors(std::uint64_t code, std::vector<ProductEdge>& out) const {
  out.clear();
  const std::size_t k = layout_.k();
  const std::size_t ell = bundle_->alphabet_size();
  const std::uint64_t tuple = layout_.tuple_of(code);
  const TagInfo& info = tags_[layout_.tag_of(code)];
  const std::size_t t = info.letters.size();

  const std::size_t component = info.main ? info.behind : t;
  const State q = layout_.component_of(code, component);
  const std::uint64_t rest = tuple - q * layout_.stride(component);
  const std::uint64_t shift_mod = ipow(ell, k - 2);

  for (Letter a = 0; a < ell; ++a) {
    const std::uint64_t extended = info.word * ell + a;  // index of u a, length t + 1
    std::uint64_t next = 0;
    if (info.main) {
      next = main_tag((info.behind + 1) % k, (info.word % shift_mod) * ell + a);
    } else if (t + 1 <= k - 2) {
      next = init_tag(t + 1, extended);
    } else {
      next = main_tag(k - 1, extended);
    }
    for (const State p : reach_[component].successors(t + 1, extended, q)) {
      out.push_back({a, layout_.compose(next, rest + p * layout_.stride(component))});
    }
  }
}

std::string LeapfrogSpace::tag_name(std::uint64_t tag) const {
  const TagInfo& info = tags_.at(tag);
  if (!info.main) return "init(" + word_name(info.letters) + ")";
  return "(" + std::to_string(info.behind) + "," + word_name(info.letters) + ")";
}

// ---------------------------------------------------------------------------

std::unique_ptr<ProductSpace> make_product_space(Construction c, const Bundle& bundle) {
  switch (c) {
    case Construction::direct:
      return std::make_unique<DirectSpace>(bundle);
    case Construction::nodding:
      return std::make_unique<NoddingSpace>(bundle, false);
    case Construction::echoing:
      return std::make_unique<NoddingSpace>(bundle, true);
    case Construction::catchup:
      return std::make_unique<CatchupSpace>(bundle);
    case Construction::leapfrog:
      return std::make_unique<LeapfrogSpace>(bundle);
  }
  throw InputError("unknown construction");
}

}  // namespace nfai
