#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcms/bit_vector.hpp"

namespace hcms {

/// Dense row-major matrix over GF(2). Every row is a BitVector of length
/// cols(); a 0 x n matrix is a valid "void" matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows);
  static BitMatrix from_columns(std::size_t rows, std::span<const BitVector> columns);
  /// Every string is one row of '0'/'1'. An empty list gives a 0 x 0 matrix.
  static BitMatrix from_strings(std::span<const std::string> rows);
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept {
    rows_[r].set(c, value);
  }
  void flip(std::size_t r, std::size_t c) noexcept { rows_[r].flip(c); }

  const BitVector& row(std::size_t r) const noexcept { return rows_[r]; }
  std::span<const BitVector> row_vectors() const noexcept { return rows_; }
  void set_row(std::size_t r, BitVector v);
  void append_row(BitVector v);
  /// row[target] += row[source]
  void add_row(std::size_t target, std::size_t source);
  void swap_rows(std::size_t a, std::size_t b) noexcept { std::swap(rows_[a], rows_[b]); }

  BitVector column(std::size_t c) const;
  std::vector<BitVector> columns() const;

  BitMatrix transpose() const;
  BitMatrix row_block(std::size_t begin, std::size_t count) const;
  BitMatrix col_block(std::size_t begin, std::size_t count) const;
  /// New matrix whose column j is column order[j] of this one.
  BitMatrix permute_columns(std::span<const std::size_t> order) const;

  bool is_zero() const noexcept;
  bool is_square() const noexcept { return rows() == cols_; }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend BitVector operator*(const BitMatrix& a, const BitVector& x);
  BitMatrix& operator+=(const BitMatrix& other);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) {
    a += b;
    return a;
  }

  /// Rows joined by '\n', no header and no trailing newline.
  std::string to_string() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

BitMatrix vstack(std::span<const BitMatrix> blocks);
BitMatrix vstack(std::initializer_list<BitMatrix> blocks);
BitMatrix hstack(std::span<const BitMatrix> blocks);
BitMatrix hstack(std::initializer_list<BitMatrix> blocks);
/// Block-diagonal matrix from the given blocks.
BitMatrix block_diagonal(std::span<const BitMatrix> blocks);

}  // namespace hcms
