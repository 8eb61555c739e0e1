#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nfai/automaton.hpp"
#include "nfai/bool_matrix.hpp"
#include "nfai/bundle.hpp"

namespace nfai {

enum class Construction { direct, nodding, echoing, catchup, leapfrog };

inline constexpr Construction kAllConstructions[] = {
    Construction::direct, Construction::nodding, Construction::echoing, Construction::catchup,
    Construction::leapfrog};

std::string_view to_string(Construction c) noexcept;
std::optional<Construction> parse_construction(std::string_view name) noexcept;

/// A product state: one state per component plus a construction-specific
/// copy tag (0 is always the base copy).
struct ProductStateId {
  std::vector<State> components;
  std::uint64_t tag = 0;

  bool operator==(const ProductStateId&) const = default;
};

/// Mixed-radix packing of product states with radix order
/// (tag, q_{k-1}, ..., q_0), tag most significant. Base-copy states
/// therefore occupy the prefix [0, tuple_count()).
class ProductLayout {
 public:
  ProductLayout() = default;
  /// Throws InputError if the packed space does not fit in 64 bits.
  ProductLayout(std::vector<std::size_t> component_sizes, std::uint64_t tag_count);

  [[nodiscard]] std::size_t k() const noexcept { return sizes_.size(); }
  [[nodiscard]] std::size_t component_size(std::size_t i) const { return sizes_.at(i); }
  [[nodiscard]] const std::vector<std::size_t>& component_sizes() const noexcept { return sizes_; }
  [[nodiscard]] std::uint64_t tag_count() const noexcept { return tag_count_; }
  [[nodiscard]] std::uint64_t tuple_count() const noexcept { return tuple_count_; }
  /// Product of all radices; every code is below this.
  [[nodiscard]] std::uint64_t size() const noexcept { return tuple_count_ * tag_count_; }
  [[nodiscard]] std::uint64_t stride(std::size_t i) const { return strides_.at(i); }

  [[nodiscard]] std::uint64_t encode(const ProductStateId& id) const;
  [[nodiscard]] ProductStateId decode(std::uint64_t code) const;

  /// Index of a component tuple inside one copy (q_0 least significant).
  [[nodiscard]] std::uint64_t tuple_index(std::span<const State> components) const;
  void decode_tuple(std::uint64_t tuple, std::span<State> out) const;

  [[nodiscard]] std::uint64_t tag_of(std::uint64_t code) const noexcept {
    return code / tuple_count_;
  }
  [[nodiscard]] std::uint64_t tuple_of(std::uint64_t code) const noexcept {
    return code % tuple_count_;
  }
  [[nodiscard]] State component_of(std::uint64_t code, std::size_t i) const noexcept {
    return static_cast<State>((code % tuple_count_) / strides_[i] % sizes_[i]);
  }
  [[nodiscard]] std::uint64_t compose(std::uint64_t tag, std::uint64_t tuple) const noexcept {
    return tag * tuple_count_ + tuple;
  }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t tuple_count_ = 1;
  std::uint64_t tag_count_ = 1;
};

/// All u-reachability relations of one automaton for |u| <= max_len.
///
/// Words of length t are indexed big-endian in base l, so index(u a) =
/// index(u) * l + a. Relations are built by extending a prefix relation with
/// one adjacency matrix at a time.
class ReachTable {
 public:
  ReachTable(const Nfa& a, std::size_t max_len);

  [[nodiscard]] std::size_t max_len() const noexcept { return max_len_; }
  [[nodiscard]] std::size_t alphabet_size() const noexcept { return ell_; }

  /// Index of u among the words of length |u|.
  [[nodiscard]] std::uint64_t word_index(std::span<const Letter> u) const;

  [[nodiscard]] const BoolMatrix& relation(std::size_t len, std::uint64_t index) const;
  [[nodiscard]] const BoolMatrix& relation(std::span<const Letter> u) const {
    return relation(u.size(), word_index(u));
  }
  /// States p with q --u--> p, ascending.
  [[nodiscard]] std::span<const State> successors(std::size_t len, std::uint64_t index,
                                                  State q) const;
  /// Whether q --u--> f for some final f.
  [[nodiscard]] bool reaches_final(std::size_t len, std::uint64_t index, State q) const;

  /// max over |u| <= max_len of |Delta^u|.
  [[nodiscard]] std::size_t max_relation_size() const noexcept { return max_size_; }

 private:
  [[nodiscard]] std::size_t slot(std::size_t len, std::uint64_t index) const;

  std::size_t n_ = 0;
  std::size_t ell_ = 0;
  std::size_t max_len_ = 0;
  std::vector<std::size_t> len_offset_;
  std::vector<BoolMatrix> relations_;
  std::vector<BitVector> reach_final_;
  // CSR over (slot, state).
  std::vector<std::size_t> offsets_;
  std::vector<State> targets_;
  std::size_t max_size_ = 0;
};

struct ProductEdge {
  Label label = 0;
  std::uint64_t dst = 0;
};

/// The implicit state graph of one product construction. Successors are
/// generated on demand from the component adjacency lists, so neither the
/// full product nor its accessible part has to be stored to search it.
class ProductSpace {
 public:
  virtual ~ProductSpace() = default;

  [[nodiscard]] Construction construction() const noexcept { return construction_; }
  [[nodiscard]] const Bundle& bundle() const noexcept { return *bundle_; }
  [[nodiscard]] const ProductLayout& layout() const noexcept { return layout_; }
  [[nodiscard]] std::uint64_t initial() const noexcept { return initial_; }
  [[nodiscard]] virtual bool has_epsilon() const noexcept { return false; }

  [[nodiscard]] virtual bool is_final(std::uint64_t code) const = 0;
  /// Clears `out` and appends every outgoing edge of `code` in a fixed order.
  virtual void successors(std::uint64_t code, std::vector<ProductEdge>& out) const = 0;
  /// Human-readable copy tag, e.g. "base", "(1,a)".
  [[nodiscard]] virtual std::string tag_name(std::uint64_t tag) const = 0;

 protected:
  ProductSpace(Construction c, const Bundle& bundle, std::uint64_t tag_count);

  [[nodiscard]] bool base_tuple_final(std::uint64_t tuple) const;

  Construction construction_;
  const Bundle* bundle_;
  ProductLayout layout_;
  std::uint64_t initial_ = 0;
};

/// Direct (Cartesian) product: every component moves on every letter.
class DirectSpace final : public ProductSpace {
 public:
  explicit DirectSpace(const Bundle& bundle);
  bool is_final(std::uint64_t code) const override;
  void successors(std::uint64_t code, std::vector<ProductEdge>& out) const override;
  std::string tag_name(std::uint64_t tag) const override;
};

/// Nodding product (epsilon-NFA) and its epsilon-free echoing variant.
///
/// One base copy plus, for each letter a and volley i in [1, k-1], a copy
/// (i, a). Volley 0 leaves the base reading a and moves component 0; volley
/// i >= 1 moves component i on a, reading epsilon (nodding) or a (echoing),
/// and volley k-1 returns to the base.
class NoddingSpace final : public ProductSpace {
 public:
  NoddingSpace(const Bundle& bundle, bool echoing);

  bool has_epsilon() const noexcept override { return !echoing_; }
  bool is_final(std::uint64_t code) const override;
  void successors(std::uint64_t code, std::vector<ProductEdge>& out) const override;
  std::string tag_name(std::uint64_t tag) const override;

  /// Tag of the copy entered by volley i-1 of the a-petal, i in [1, k-1].
  [[nodiscard]] std::uint64_t petal_tag(std::size_t i, Letter a) const noexcept {
    return 1 + static_cast<std::uint64_t>(a) * (layout_.k() - 1) + (i - 1);
  }
  /// Volley index leaving a copy (0 for the base), i.e. the component it moves.
  [[nodiscard]] std::size_t volley_of(std::uint64_t tag) const noexcept {
    return tag == 0 ? 0 : static_cast<std::size_t>((tag - 1) % (layout_.k() - 1)) + 1;
  }
  /// Petal letter of a non-base copy.
  [[nodiscard]] Letter letter_of(std::uint64_t tag) const noexcept {
    return static_cast<Letter>((tag - 1) / (layout_.k() - 1));
  }

 private:
  bool echoing_;
};

/// Catch-up product: l^k petals, one per k-letter word u; the i-th volley of
/// the u-petal reads u_i and moves component i along all of u. Tails for
/// each v of length 1..k-1 accept words whose length is not a multiple of k.
class CatchupSpace final : public ProductSpace {
 public:
  explicit CatchupSpace(const Bundle& bundle);

  bool is_final(std::uint64_t code) const override;
  void successors(std::uint64_t code, std::vector<ProductEdge>& out) const override;
  std::string tag_name(std::uint64_t tag) const override;

  [[nodiscard]] const std::vector<ReachTable>& reach_tables() const noexcept { return reach_; }

  enum class Kind : std::uint8_t { base, petal, tail };
  struct TagInfo {
    Kind kind = Kind::base;
    std::size_t len = 0;        // |u| (k for petals, |v| for tails)
    std::uint64_t word = 0;     // index of u or v among words of that length
    std::size_t position = 0;   // volleys already taken in this petal or tail
    Word letters;
  };
  [[nodiscard]] const TagInfo& tag_info(std::uint64_t tag) const { return tags_.at(tag); }

 private:
  [[nodiscard]] std::uint64_t petal_tag(std::uint64_t word, std::size_t position) const;
  [[nodiscard]] std::uint64_t tail_tag(std::size_t len, std::uint64_t word,
                                       std::size_t position) const;

  std::vector<ReachTable> reach_;
  std::vector<TagInfo> tags_;
  std::vector<std::uint64_t> tail_offset_;
  std::uint64_t words_k_ = 0;
};

/// Leapfrog product: an initialization tree over words of length <= k-2
/// feeding k * l^{k-1} main copies (i, u), |u| = k-1. Reading a in (i, u)
/// moves component i along u a and enters (i+1 mod k, u[1:] a).
class LeapfrogSpace final : public ProductSpace {
 public:
  explicit LeapfrogSpace(const Bundle& bundle);

  bool is_final(std::uint64_t code) const override;
  void successors(std::uint64_t code, std::vector<ProductEdge>& out) const override;
  std::string tag_name(std::uint64_t tag) const override;

  struct TagInfo {
    bool main = false;
    std::size_t behind = 0;   // main copies: the component updated next
    std::uint64_t word = 0;   // index of u among words of length |u|
    Word letters;
  };
  [[nodiscard]] const TagInfo& tag_info(std::uint64_t tag) const { return tags_.at(tag); }

 private:
  [[nodiscard]] std::uint64_t init_tag(std::size_t len, std::uint64_t word) const;
  [[nodiscard]] std::uint64_t main_tag(std::size_t behind, std::uint64_t word) const;

  std::vector<ReachTable> reach_;
  std::vector<TagInfo> tags_;
  std::vector<std::uint64_t> init_offset_;
  std::uint64_t main_offset_ = 0;
  std::uint64_t words_km1_ = 0;
};

std::unique_ptr<ProductSpace> make_product_space(Construction c, const Bundle& bundle);

}  // namespace nfai
