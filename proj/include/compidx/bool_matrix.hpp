#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace compidx {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Fixed-width dynamic bitset used for vertex sets.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_(words_for(n), 0) {}
  VertexSet(std::size_t n, std::span<const Word> words);

  static VertexSet full(std::size_t n);
  static VertexSet of(std::size_t n, std::initializer_list<std::size_t> members);

  std::size_t universe() const noexcept { return n_; }
  bool test(std::size_t v) const noexcept { return (words_[v / kWordBits] >> (v % kWordBits)) & 1u; }
  void set(std::size_t v) noexcept { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void reset(std::size_t v) noexcept { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  /// Removes every member of `other`.
  VertexSet& subtract(const VertexSet& other) noexcept;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  /// Members in ascending order.
  std::vector<std::size_t> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Word> words_;
};

/// Square matrix over the Boolean semiring ({0,1}, OR, AND), stored as bit-rows.
class BooleanMatrix {
 public:
  BooleanMatrix() = default;
  explicit BooleanMatrix(std::size_t n) : n_(n), stride_(words_for(n)), data_(n * stride_, 0) {}

  static BooleanMatrix identity(std::size_t n);
  static BooleanMatrix ones(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t stride() const noexcept { return stride_; }

  bool get(std::size_t i, std::size_t j) const noexcept {
    return (data_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    Word& w = data_[i * stride_ + j / kWordBits];
    const Word bit = Word{1} << (j % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
  }

  std::span<const Word> row(std::size_t i) const noexcept { return {data_.data() + i * stride_, stride_}; }
  std::span<Word> row(std::size_t i) noexcept { return {data_.data() + i * stride_, stride_}; }
  VertexSet row_set(std::size_t i) const { return VertexSet(n_, row(i)); }

  bool is_zero() const noexcept;
  bool is_all_ones() const noexcept;
  std::size_t count() const noexcept;
  BooleanMatrix transposed() const;

  std::span<const Word> raw() const noexcept { return data_; }

  friend bool operator==(const BooleanMatrix&, const BooleanMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Semiring product; throws DimensionMismatch.
BooleanMatrix bool_multiply(const BooleanMatrix& a, const BooleanMatrix& b);

/// A^m for m >= 1 by repeated squaring.
BooleanMatrix bool_power(const BooleanMatrix& a, std::size_t m);

/// 128-bit content hash; equal matrices hash equal, collisions are confirmed by callers.
struct Hash128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const Hash128&, const Hash128&) = default;
};

struct Hash128Hasher {
  std::size_t operator()(const Hash128& h) const noexcept { return static_cast<std::size_t>(h.lo ^ (h.hi * 0x9e3779b97f4a7c15ULL)); }
};

Hash128 hash_words(std::span<const Word> words, std::uint64_t salt = 0);

}  // namespace compidx
