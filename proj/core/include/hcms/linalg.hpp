#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hcms/bit_matrix.hpp"
#include "hcms/bit_vector.hpp"

namespace hcms {

class Subspace;

struct RowEchelon {
  BitMatrix reduced;                 // rref, zero rows kept at the bottom
  std::vector<std::size_t> pivots;   // pivot column of row k, ascending
};

/// Reduced row echelon form. Row space is preserved.
RowEchelon rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// {x : m x = 0} as a canonical subspace of GF(2)^cols.
Subspace null_space(const BitMatrix& m);

/// Rows y with y^T m = 0, as the rows of a full-row-rank matrix with
/// rows() - rank(m) rows and m.rows() columns.
BitMatrix left_kernel(const BitMatrix& m);

/// Canonical row basis: the nonzero rows of rref(m).
BitMatrix row_basis(const BitMatrix& m);

struct RowBasisTransforms {
  BitMatrix expand;  // unique C with A = C * B
  BitMatrix select;  // one D with B = D * A
};

/// Transforms between a matrix A and a row basis matrix B of A.
/// Throws decomposition_invalid when B is not a row basis matrix of A.
RowBasisTransforms row_basis_transforms(const BitMatrix& a, const BitMatrix& b);

/// Throws singular when m is not invertible.
BitMatrix invert(const BitMatrix& m);

/// One x with a x = y (free variables zero), or nullopt.
std::optional<BitVector> solve(const BitMatrix& a, const BitVector& y);

/// Factorises a once so that many right-hand sides can be solved cheaply.
/// Keeps E with E a = rref(a); consistency of y is checked on the rows of
/// E beyond rank(a).
class LinearSolver {
 public:
  explicit LinearSolver(const BitMatrix& a);

  std::size_t rank() const noexcept { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool consistent(const BitVector& y) const;
  std::optional<BitVector> solve(const BitVector& y) const;
  /// The rows of E past rank(): a basis of the left kernel of a.
  BitMatrix left_kernel() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::size_t> pivots_;
  std::vector<BitVector> transform_;  // rows of E, each of length rows_
};

}  // namespace hcms
