#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nfai {

/// Dense bit vector over 64-bit words. Bits past size() are always zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool test(std::size_t i) const {
    return ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
  }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void reset(std::size_t i) { set(i, false); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void fill(bool value);

  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] bool none() const noexcept { return count() == 0; }
  /// Index of the first set bit at or after `from`, if any.
  [[nodiscard]] std::optional<std::size_t> find_next(std::size_t from) const;

  [[nodiscard]] std::span<const Word> words() const noexcept { return words_; }
  [[nodiscard]] std::span<Word> words() noexcept { return words_; }

  /// Lowercase hex, one byte per two digits, bit i in byte i/8 at position i%8.
  [[nodiscard]] std::string to_hex() const;
  /// Inverse of to_hex. Returns nullopt on bad digits, wrong length, or set
  /// padding bits.
  static std::optional<BitVector> from_hex(std::string_view hex, std::size_t size);

  bool operator==(const BitVector&) const = default;

  static std::size_t words_for(std::size_t bits) noexcept {
    return (bits + kWordBits - 1) / kWordBits;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Row-major bit-packed 0/1 matrix over the boolean semiring.
class BoolMatrix {
 public:
  using Word = BitVector::Word;
  static constexpr std::size_t kWordBits = BitVector::kWordBits;

  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(BitVector::words_for(cols)), bits_(rows * stride_, 0) {}

  static BoolMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return stride_; }

  [[nodiscard]] bool get(std::size_t r, std::size_t c) const {
    return ((bits_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U) != 0;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    const Word mask = Word{1} << (c % kWordBits);
    Word& w = bits_[r * stride_ + c / kWordBits];
    w = value ? (w | mask) : (w & ~mask);
  }

  [[nodiscard]] std::span<const Word> row(std::size_t r) const {
    return {bits_.data() + r * stride_, stride_};
  }
  [[nodiscard]] std::span<Word> row(std::size_t r) { return {bits_.data() + r * stride_, stride_}; }

  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return count() == 0; }

  /// Entrywise A <= B (A implies B).
  [[nodiscard]] bool leq(const BoolMatrix& other) const;
  /// First (row, col) where this is 1 and `other` is 0.
  [[nodiscard]] std::optional<std::pair<std::size_t, std::size_t>> first_excess(
      const BoolMatrix& other) const;

  bool operator==(const BoolMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
};

/// Boolean product (OR of ANDs). Dispatches to the method-of-four-Russians
/// kernel once the inner dimension reaches kFourRussiansThreshold.
BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b);

inline constexpr std::size_t kFourRussiansThreshold = 256;

/// Row-OR kernel: for every set bit (i, t) of `a`, OR row t of `b` into row i.
BoolMatrix multiply_rowwise(const BoolMatrix& a, const BoolMatrix& b);

/// Method of four Russians: 8-row strips of `b` are tabulated into 256
/// combinations and `a` is consumed one byte at a time.
BoolMatrix multiply_four_russians(const BoolMatrix& a, const BoolMatrix& b);

/// Boolean product restricted to rows [row_begin, row_end) of `a`.
BoolMatrix multiply_rows(const BoolMatrix& a, std::size_t row_begin, std::size_t row_end,
                         const BoolMatrix& b);

}  // namespace nfai
