#include "compidx/bool_matrix.hpp"

#include <algorithm>

#include "compidx/error.hpp"
#include "compidx/kernels.hpp"

namespace compidx {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::DigonArc: return "DigonArc";
    case ErrorCode::IntraPartArc: return "IntraPartArc";
    case ErrorCode::MissingCrossArc: return "MissingCrossArc";
    case ErrorCode::NotMultipartite: return "NotMultipartite";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::NotInU: return "NotInU";
    case ErrorCode::NoDirectedCycle: return "NoDirectedCycle";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::NotTournament: return "NotTournament";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::InvalidZeta: return "InvalidZeta";
    case ErrorCode::ConsecutiveSamePart: return "ConsecutiveSamePart";
    case ErrorCode::ExhaustedTries: return "ExhaustedTries";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

VertexSet::VertexSet(std::size_t n, std::span<const Word> words) : n_(n), words_(words.begin(), words.end()) {
  words_.resize(words_for(n), 0);
}

VertexSet VertexSet::full(std::size_t n) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) s.set(v);
  return s;
}

VertexSet VertexSet::of(std::size_t n, std::initializer_list<std::size_t> members) {
  VertexSet s(n);
  for (auto v : members) s.set(v);
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

BooleanMatrix BooleanMatrix::identity(std::size_t n) {
  BooleanMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BooleanMatrix BooleanMatrix::ones(std::size_t n) {
  BooleanMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j);
  return m;
}

bool BooleanMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

bool BooleanMatrix::is_all_ones() const noexcept {
  if (n_ == 0) return true;
  const std::size_t tail = n_ % kWordBits;
  const Word last = tail == 0 ? ~Word{0} : (Word{1} << tail) - 1;
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(i);
    for (std::size_t w = 0; w + 1 < stride_; ++w)
      if (r[w] != ~Word{0}) return false;
    if (r[stride_ - 1] != last) return false;
  }
  return true;
}

std::size_t BooleanMatrix::count() const noexcept {
  std::size_t c = 0;
  for (Word w : data_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BooleanMatrix BooleanMatrix::transposed() const {
  BooleanMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(i);
    for (std::size_t w = 0; w < stride_; ++w) {
      Word bits = r[w];
      while (bits != 0) {
        t.set(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)), i);
        bits &= bits - 1;
      }
    }
  }
  return t;
}

BooleanMatrix bool_multiply(const BooleanMatrix& a, const BooleanMatrix& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.size()) + "x" + std::to_string(a.size()) + " times " + std::to_string(b.size()) +
                    "x" + std::to_string(b.size()));
  if (a.size() >= kernels::kParallelThreshold) return kernels::multiply_omp(a, b);
  return kernels::multiply_serial(a, b);
}

BooleanMatrix bool_power(const BooleanMatrix& a, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "bool_power exponent must be >= 1");
  BooleanMatrix result;
  bool have_result = false;
  BooleanMatrix base = a;
  while (true) {
    if (m & 1u) {
      result = have_result ? bool_multiply(result, base) : base;
      have_result = true;
    }
    m >>= 1;
    if (m == 0) break;
    base = bool_multiply(base, base);
  }
  return result;
}

namespace {

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Hash128 hash_words(std::span<const Word> words, std::uint64_t salt) {
  std::uint64_t lo = mix64(salt ^ 0x6a09e667f3bcc908ULL);
  std::uint64_t hi = mix64(salt ^ 0xbb67ae8584caa73bULL);
  for (std::size_t i = 0; i < words.size(); ++i) {
    lo = mix64(lo ^ (words[i] + 0x9e3779b97f4a7c15ULL * (i + 1)));
    hi = mix64(hi + (words[i] ^ 0xc2b2ae3d27d4eb4fULL) * 0x165667b19e3779f9ULL + i);
  }
  return {lo, hi};
}

}  // namespace compidx
