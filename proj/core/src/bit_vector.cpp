#include "hcms/bit_vector.hpp"

#include <bit>

#include "hcms/error.hpp"

namespace hcms {

BitVector BitVector::unit(std::size_t len, std::size_t pos) {
  require(pos < len, Errc::dimension_mismatch, "unit vector position out of range");
  BitVector v(len);
  v.set(pos);
  return v;
}

BitVector BitVector::ones(std::size_t len) {
  BitVector v(len);
  for (auto& w : v.words_) w = ~word_type{0};
  if (len % word_bits != 0) {
    v.words_.back() &= (word_type{1} << (len % word_bits)) - 1;
  }
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      fail(Errc::malformed_input,
           "expected only '0'/'1' characters, got '" + std::string(bits) + "'");
    }
  }
  return v;
}

BitVector BitVector::from_value(std::size_t len, std::uint64_t value) {
  require(len <= 64, Errc::overflow, "from_value supports at most 64 bits");
  require(len == 64 || value >> len == 0, Errc::overflow,
          "value does not fit in requested length");
  BitVector v(len);
  for (std::size_t i = 0; i < len; ++i) {
    if ((value >> (len - 1 - i)) & 1U) v.set(i);
  }
  return v;
}

BitVector BitVector::concat(std::span<const BitVector> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  BitVector out(total);
  std::size_t at = 0;
  for (const auto& p : parts) {
    if (at % word_bits == 0) {
      // aligned fast path
      const auto src = p.words();
      for (std::size_t w = 0; w < src.size(); ++w) out.words_[at / word_bits + w] = src[w];
    } else {
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.test(i)) out.set(at + i);
      }
    }
    at += p.size();
  }
  return out;
}

std::size_t BitVector::weight() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::is_zero() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::optional<std::size_t> BitVector::lowest_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return std::nullopt;
}

BitVector& BitVector::operator+=(const BitVector& other) {
  require(len_ == other.len_, Errc::dimension_mismatch,
          "vector sizes differ: " + std::to_string(len_) + " vs " +
              std::to_string(other.len_));
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  require(len_ == other.len_, Errc::dimension_mismatch,
          "vector sizes differ in dot product");
  word_type acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return (std::popcount(acc) & 1) != 0;
}

BitVector BitVector::slice(std::size_t begin, std::size_t count) const {
  require(begin + count <= len_, Errc::dimension_mismatch, "slice out of range");
  BitVector out(count);
  if (begin % word_bits == 0) {
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
      out.words_[w] = words_[begin / word_bits + w];
    }
    if (count % word_bits != 0) {
      out.words_.back() &= (word_type{1} << (count % word_bits)) - 1;
    }
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (test(begin + i)) out.set(i);
  }
  return out;
}

std::uint64_t BitVector::value_msb_first() const {
  require(len_ <= 64, Errc::overflow, "value_msb_first supports at most 64 bits");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < len_; ++i) value = (value << 1) | (test(i) ? 1U : 0U);
  return value;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

std::size_t BitVector::hash() const noexcept {
  // splitmix-style mixing per word
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ len_;
  for (auto w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept {
  if (auto c = a.len_ <=> b.len_; c != 0) return c;
  // lexicographic in position order, position 0 first
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const auto x = a.words_[w];
    const auto y = b.words_[w];
    if (x == y) continue;
    const auto diff = x ^ y;
    const auto bit = std::countr_zero(diff);
    return ((x >> bit) & 1U) ? std::strong_ordering::greater
                             : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace hcms
