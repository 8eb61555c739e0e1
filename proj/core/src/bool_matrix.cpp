#include "nfai/bool_matrix.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace nfai {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

void check_product_shape(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("boolean product: inner dimensions differ (" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                ")");
  }
}

}  // namespace

void BitVector::fill(bool value) {
  for (auto& w : words_) w = value ? ~Word{0} : Word{0};
  if (value && size_ % kWordBits != 0) {
    words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::optional<std::size_t> BitVector::find_next(std::size_t from) const {
  if (from >= size_) return std::nullopt;
  std::size_t wi = from / kWordBits;
  Word w = words_[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) {
      const std::size_t idx = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      return idx < size_ ? std::optional<std::size_t>(idx) : std::nullopt;
    }
    if (++wi == words_.size()) return std::nullopt;
    w = words_[wi];
  }
}

std::string BitVector::to_hex() const {
  const std::size_t n_bytes = (size_ + 7) / 8;
  std::string out;
  out.reserve(2 * n_bytes);
  for (std::size_t b = 0; b < n_bytes; ++b) {
    const auto byte =
        static_cast<unsigned>((words_[b / 8] >> (8 * (b % 8))) & 0xFFU);
    out.push_back(kHexDigits[byte >> 4]);
    out.push_back(kHexDigits[byte & 0xFU]);
  }
  return out;
}

std::optional<BitVector> BitVector::from_hex(std::string_view hex, std::size_t size) {
  const std::size_t n_bytes = (size + 7) / 8;
  if (hex.size() != 2 * n_bytes) return std::nullopt;
  BitVector out(size);
  for (std::size_t b = 0; b < n_bytes; ++b) {
    const int hi = hex_value(hex[2 * b]);
    const int lo = hex_value(hex[2 * b + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    const auto byte = static_cast<Word>((hi << 4) | lo);
    out.words_[b / 8] |= byte << (8 * (b % 8));
  }
  if (size % kWordBits != 0 && !out.words_.empty()) {
    const Word padding = ~((Word{1} << (size % kWordBits)) - 1);
    if ((out.words_.back() & padding) != 0) return std::nullopt;
  }
  return out;
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

std::size_t BoolMatrix::count() const noexcept {
  std::size_t total = 0;
  for (const auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BoolMatrix::leq(const BoolMatrix& other) const { return !first_excess(other).has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> BoolMatrix::first_excess(
    const BoolMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix comparison: shapes differ");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t w = 0; w < stride_; ++w) {
      const Word excess = bits_[r * stride_ + w] & ~other.bits_[r * stride_ + w];
      if (excess != 0) {
        return std::pair{r, w * kWordBits + static_cast<std::size_t>(std::countr_zero(excess))};
      }
    }
  }
  return std::nullopt;
}

BoolMatrix multiply_rows(const BoolMatrix& a, std::size_t row_begin, std::size_t row_end,
                         const BoolMatrix& b) {
  check_product_shape(a, b);
  assert(row_begin <= row_end && row_end <= a.rows());
  BoolMatrix c(row_end - row_begin, b.cols());
  const std::size_t stride = b.words_per_row();
  for (std::size_t i = row_begin; i < row_end; ++i) {
    auto out = c.row(i - row_begin);
    const auto in = a.row(i);
    for (std::size_t wi = 0; wi < in.size(); ++wi) {
      BoolMatrix::Word w = in[wi];
      while (w != 0) {
        const std::size_t t = wi * BoolMatrix::kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        w &= w - 1;
        const auto src = b.row(t);
        for (std::size_t j = 0; j < stride; ++j) out[j] |= src[j];
      }
    }
  }
  return c;
}

BoolMatrix multiply_rowwise(const BoolMatrix& a, const BoolMatrix& b) {
  return multiply_rows(a, 0, a.rows(), b);
}

BoolMatrix multiply_four_russians(const BoolMatrix& a, const BoolMatrix& b) {
  check_product_shape(a, b);
  const std::size_t inner = a.cols();
  const std::size_t stride = b.words_per_row();
  BoolMatrix c(a.rows(), b.cols());
  // table[mask * stride ..] = OR of the strip rows selected by mask.
  std::vector<BoolMatrix::Word> table(256 * stride);
  for (std::size_t strip = 0; strip < inner; strip += 8) {
    const std::size_t height = std::min<std::size_t>(8, inner - strip);
    std::fill(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(stride), 0);
    for (std::size_t mask = 1; mask < (std::size_t{1} << height); ++mask) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
      const std::size_t rest = mask & (mask - 1);
      const auto src = b.row(strip + low);
      for (std::size_t j = 0; j < stride; ++j) {
        table[mask * stride + j] = table[rest * stride + j] | src[j];
      }
    }
    const std::size_t word_index = strip / BoolMatrix::kWordBits;
    const std::size_t shift = strip % BoolMatrix::kWordBits;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const std::size_t mask = (a.row(i)[word_index] >> shift) & ((std::size_t{1} << height) - 1);
      if (mask == 0) continue;
      auto out = c.row(i);
      for (std::size_t j = 0; j < stride; ++j) out[j] |= table[mask * stride + j];
    }
  }
  return c;
}

BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() >= kFourRussiansThreshold) return multiply_four_russians(a, b);
  return multiply_rowwise(a, b);
}

}  // namespace nfai
