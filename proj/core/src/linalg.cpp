#include "hcms/linalg.hpp"

#include <utility>

#include "hcms/error.hpp"
#include "hcms/subspace.hpp"

namespace hcms {
namespace detail {

// Gauss-Jordan over columns [0, pivot_limit). Rows at index >= r have no
// bits below the current column, so row XORs may start at the pivot's word.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < rows.size(); ++c) {
    std::size_t found = r;
    while (found < rows.size() && !rows[found].test(c)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[r], rows[found]);
    const std::size_t w0 = c / BitVector::word_bits;
    const auto src = rows[r].words();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || !rows[i].test(c)) continue;
      auto dst = rows[i].words();
      for (std::size_t w = w0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

RowEchelon rref(const BitMatrix& m) {
  std::vector<BitVector> rows(m.row_vectors().begin(), m.row_vectors().end());
  auto pivots = detail::eliminate(rows, m.cols());
  return {BitMatrix::from_rows(m.cols(), std::move(rows)), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

Subspace null_space(const BitMatrix& m) {
  const auto echelon = rref(m);
  const auto& pivots = echelon.pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector x = BitVector::unit(m.cols(), f);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (echelon.reduced.get(k, f)) x.set(pivots[k]);
    }
    basis.push_back(std::move(x));
  }
  return Subspace::span(m.cols(), basis);
}

BitMatrix left_kernel(const BitMatrix& m) { return null_space(m.transpose()).basis(); }

BitMatrix row_basis(const BitMatrix& m) {
  const auto echelon = rref(m);
  return echelon.reduced.row_block(0, echelon.pivots.size());
}

RowBasisTransforms row_basis_transforms(const BitMatrix& a, const BitMatrix& b) {
  require(a.cols() == b.cols(), Errc::dimension_mismatch,
          "row basis transforms need equal column counts");
  require(rank(b) == b.rows(), Errc::decomposition_invalid,
          "candidate row basis matrix is not full row rank");
  const LinearSolver in_b(b.transpose());
  const LinearSolver in_a(a.transpose());
  require(in_a.rank() == in_b.rank(), Errc::decomposition_invalid,
          "row spaces differ in dimension");

  BitMatrix expand(a.rows(), b.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto c = in_b.solve(a.row(r));
    require(c.has_value(), Errc::decomposition_invalid,
            "row " + std::to_string(r) + " of A is not in row(B)");
    expand.set_row(r, std::move(*c));
  }
  BitMatrix select(b.rows(), a.rows());
  for (std::size_t k = 0; k < b.rows(); ++k) {
    auto d = in_a.solve(b.row(k));
    require(d.has_value(), Errc::decomposition_invalid,
            "row " + std::to_string(k) + " of B is not in row(A)");
    select.set_row(k, std::move(*d));
  }
  return {std::move(expand), std::move(select)};
}

BitMatrix invert(const BitMatrix& m) {
  require(m.is_square(), Errc::dimension_mismatch, "only square matrices can be inverted");
  const auto n = m.rows();
  std::vector<BitVector> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const BitVector parts[] = {m.row(r), BitVector::unit(n, r)};
    rows.push_back(BitVector::concat(parts));
  }
  const auto pivots = detail::eliminate(rows, n);
  require(pivots.size() == n, Errc::singular,
          "matrix is singular (rank " + std::to_string(pivots.size()) + " < " +
              std::to_string(n) + ")");
  std::vector<BitVector> inverse;
  inverse.reserve(n);
  for (auto& r : rows) inverse.push_back(r.slice(n, n));
  return BitMatrix::from_rows(n, std::move(inverse));
}

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& y) {
  return LinearSolver(a).solve(y);
}

LinearSolver::LinearSolver(const BitMatrix& a) : rows_(a.rows()), cols_(a.cols()) {
  std::vector<BitVector> aug;
  aug.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const BitVector parts[] = {a.row(r), BitVector::unit(rows_, r)};
    aug.push_back(BitVector::concat(parts));
  }
  pivots_ = detail::eliminate(aug, cols_);
  transform_.reserve(rows_);
  for (auto& r : aug) transform_.push_back(r.slice(cols_, rows_));
}

bool LinearSolver::consistent(const BitVector& y) const {
  require(y.size() == rows_, Errc::dimension_mismatch, "right-hand side has wrong length");
  for (std::size_t k = pivots_.size(); k < rows_; ++k) {
    if (transform_[k].dot(y)) return false;
  }
  return true;
}

std::optional<BitVector> LinearSolver::solve(const BitVector& y) const {
  if (!consistent(y)) return std::nullopt;
  BitVector x(cols_);
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    if (transform_[k].dot(y)) x.set(pivots_[k]);
  }
  return x;
}

BitMatrix LinearSolver::left_kernel() const {
  return BitMatrix::from_rows(
      rows_, std::vector<BitVector>(transform_.begin() + static_cast<std::ptrdiff_t>(pivots_.size()),
                                    transform_.end()));
}

}  // namespace hcms
