#include "hcms/bit_matrix.hpp"

#include <algorithm>
#include <bit>

#include "hcms/error.hpp"

namespace hcms {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVector> rows) {
  for (const auto& r : rows) {
    require(r.size() == cols, Errc::dimension_mismatch,
            "row length " + std::to_string(r.size()) + " != " + std::to_string(cols));
  }
  BitMatrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_columns(std::size_t rows, std::span<const BitVector> columns) {
  BitMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require(columns[c].size() == rows, Errc::dimension_mismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      if (columns[c].test(r)) m.set(r, c);
    }
  }
  return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
  if (rows.empty()) return {};
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
  const auto cols = parsed.front().size();
  return from_rows(cols, std::move(parsed));
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<std::string> owned(rows.begin(), rows.end());
  return from_strings(std::span<const std::string>(owned));
}

void BitMatrix::set_row(std::size_t r, BitVector v) {
  require(v.size() == cols_, Errc::dimension_mismatch, "set_row length mismatch");
  rows_[r] = std::move(v);
}

void BitMatrix::append_row(BitVector v) {
  require(v.size() == cols_, Errc::dimension_mismatch, "append_row length mismatch");
  rows_.push_back(std::move(v));
}

void BitMatrix::add_row(std::size_t target, std::size_t source) {
  rows_[target] += rows_[source];
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].test(c)) v.set(r);
  }
  return v;
}

std::vector<BitVector> BitMatrix::columns() const {
  std::vector<BitVector> out(cols_, BitVector(rows()));
  for (std::size_t r = 0; r < rows(); ++r) {
    const auto words = rows_[r].words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      auto bits = words[w];
      while (bits != 0) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        out[w * BitVector::word_bits + b].set(r);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  const auto cols = columns();
  return from_rows(rows(), cols);
}

BitMatrix BitMatrix::row_block(std::size_t begin, std::size_t count) const {
  require(begin + count <= rows(), Errc::dimension_mismatch, "row block out of range");
  return from_rows(cols_, std::vector<BitVector>(rows_.begin() + static_cast<std::ptrdiff_t>(begin),
                                                 rows_.begin() + static_cast<std::ptrdiff_t>(begin + count)));
}

BitMatrix BitMatrix::col_block(std::size_t begin, std::size_t count) const {
  require(begin + count <= cols_, Errc::dimension_mismatch, "column block out of range");
  std::vector<BitVector> out;
  out.reserve(rows());
  for (const auto& r : rows_) out.push_back(r.slice(begin, count));
  return from_rows(count, std::move(out));
}

BitMatrix BitMatrix::permute_columns(std::span<const std::size_t> order) const {
  require(order.size() == cols_, Errc::dimension_mismatch, "permutation size mismatch");
  BitMatrix out(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (rows_[r].test(order[j])) out.set(r, j);
    }
  }
  return out;
}

bool BitMatrix::is_zero() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.is_zero(); });
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  require(a.cols() == b.rows(), Errc::dimension_mismatch,
          "matrix product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
              " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto dst = out.rows_[r].words();
    const auto words = a.rows_[r].words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      auto bits = words[w];
      while (bits != 0) {
        const auto k = w * BitVector::word_bits + static_cast<std::size_t>(std::countr_zero(bits));
        const auto src = b.rows_[k].words();
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
        bits &= bits - 1;
      }
    }
  }
  return out;
}

BitVector operator*(const BitMatrix& a, const BitVector& x) {
  require(a.cols() == x.size(), Errc::dimension_mismatch,
          "matrix-vector product: " + std::to_string(a.cols()) + " columns vs vector of " +
              std::to_string(x.size()));
  BitVector y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.rows_[r].dot(x)) y.set(r);
  }
  return y;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  require(rows() == other.rows() && cols_ == other.cols_, Errc::dimension_mismatch,
          "matrix sum dimension mismatch");
  for (std::size_t r = 0; r < rows(); ++r) rows_[r] += other.rows_[r];
  return *this;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows(); ++r) {
    if (r != 0) s += '\n';
    s += rows_[r].to_string();
  }
  return s;
}

BitMatrix vstack(std::span<const BitMatrix> blocks) {
  if (blocks.empty()) return {};
  const auto cols = blocks.front().cols();
  std::vector<BitVector> rows;
  for (const auto& b : blocks) {
    require(b.cols() == cols, Errc::dimension_mismatch, "vstack column counts differ");
    for (const auto& r : b.row_vectors()) rows.push_back(r);
  }
  return BitMatrix::from_rows(cols, std::move(rows));
}

BitMatrix vstack(std::initializer_list<BitMatrix> blocks) {
  return vstack(std::span<const BitMatrix>(blocks.begin(), blocks.size()));
}

BitMatrix hstack(std::span<const BitMatrix> blocks) {
  if (blocks.empty()) return {};
  const auto rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    require(b.rows() == rows, Errc::dimension_mismatch, "hstack row counts differ");
    cols += b.cols();
  }
  std::vector<BitVector> out;
  out.reserve(rows);
  std::vector<BitVector> pieces(blocks.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < blocks.size(); ++i) pieces[i] = blocks[i].row(r);
    out.push_back(BitVector::concat(pieces));
  }
  BitMatrix m = BitMatrix::from_rows(cols, std::move(out));
  return m;
}

BitMatrix hstack(std::initializer_list<BitMatrix> blocks) {
  return hstack(std::span<const BitMatrix>(blocks.begin(), blocks.size()));
}

BitMatrix block_diagonal(std::span<const BitMatrix> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  BitMatrix out(rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b.get(r, c)) out.set(r0 + r, c0 + c);
      }
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

}  // namespace hcms
