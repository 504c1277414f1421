#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcms {

/// Dense vector over GF(2), packed 64 bits per word. Position i lives in
/// word i / 64 at bit i % 64. Bits past size() are always zero, which lets
/// equality, hashing and weight work word-wise.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

  static BitVector unit(std::size_t len, std::size_t pos);
  static BitVector ones(std::size_t len);
  /// Parses a string of '0'/'1' characters; position 0 is the first character.
  static BitVector from_string(std::string_view bits);
  /// Reads `value` as a len-bit integer with position 0 as the most
  /// significant bit. Requires len <= 64.
  static BitVector from_value(std::size_t len, std::uint64_t value);
  static BitVector concat(std::span<const BitVector> parts);

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / word_bits] >> (i % word_bits)) & 1U;
  }
  bool operator[](std::size_t i) const noexcept { return test(i); }
  void set(std::size_t i, bool value = true) noexcept {
    const word_type mask = word_type{1} << (i % word_bits);
    if (value) {
      words_[i / word_bits] |= mask;
    } else {
      words_[i / word_bits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept {
    words_[i / word_bits] ^= word_type{1} << (i % word_bits);
  }

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  std::optional<std::size_t> lowest_set() const noexcept;

  /// GF(2) addition. Sizes must match.
  BitVector& operator+=(const BitVector& other);
  friend BitVector operator+(BitVector lhs, const BitVector& rhs) {
    lhs += rhs;
    return lhs;
  }
  bool dot(const BitVector& other) const;

  BitVector slice(std::size_t begin, std::size_t count) const;

  /// Inverse of from_value. Requires size() <= 64.
  std::uint64_t value_msb_first() const;

  std::string to_string() const;

  std::span<const word_type> words() const noexcept { return words_; }
  std::span<word_type> words() noexcept { return words_; }

  std::size_t hash() const noexcept;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& a,
                                          const BitVector& b) noexcept;

  static constexpr std::size_t word_count(std::size_t len) noexcept {
    return (len + word_bits - 1) / word_bits;
  }

 private:
  std::size_t len_ = 0;
  std::vector<word_type> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept { return v.hash(); }
};

}  // namespace hcms
