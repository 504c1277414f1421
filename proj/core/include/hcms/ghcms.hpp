#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hcms/bit_matrix.hpp"
#include "hcms/codec.hpp"
#include "hcms/hcms.hpp"

namespace hcms {

struct GhcmsBundle {
  std::size_t s = 0;
  std::size_t n = 0;
  std::size_t r = 0;  // rows of P
  std::size_t M = 0;  // total rows of the code
  BitMatrix P;
  std::vector<BitMatrix> Q;
  std::vector<BitMatrix> C;  // row basis of Q_i, d_i rows
  BitMatrix Y;               // row basis of [Q_1; ...; Q_{s-1}], d rows
  BitMatrix T;               // [Y; T] invertible
  std::vector<std::size_t> split;
  std::vector<BitMatrix> G;
  BitMatrix R;
  BitMatrix R_inv;
  std::vector<BitMatrix> E;  // Q_i = E_i C_i
  std::vector<BitMatrix> D;  // C_i = D_i Q_i
  BitMatrix E_Y;             // [Q_1; ...; Q_{s-1}] = E_Y Y
  BitMatrix D_Y;             // Y = D_Y [Q_1; ...; Q_{s-1}]
  /// Column order that turns P into the canonical Hamming matrix, when P
  /// came out of a reduction; empty otherwise.
  std::vector<std::size_t> hamming_order;
  bool perfect = false;  // d_1 + ... + d_s + (n - d) = n + r
  SwCode code;           // H_i = [G_i; C_i]
  ColumnIndex columns;

  std::vector<std::size_t> row_dims() const;
};

struct GhcmsOptions {
  std::optional<std::vector<BitMatrix>> c;
  std::optional<BitMatrix> t;
  std::optional<std::vector<std::size_t>> split;
  std::vector<std::size_t> hamming_order;
};

/// With two terminals the only sum-zero split is Q_1 = Q_2 = P for an
/// r-bit Hamming matrix P; that is what is accepted for s = 2.
void validate_ghcms_partition(std::span<const BitMatrix> q);

/// Throws not_hamming_partition, decomposition_invalid for a C_i that is
/// not a row basis of Q_i, and r_not_invertible for a T with [Y; T]
/// singular.
GhcmsBundle ghcms_build(std::vector<BitMatrix> q, GhcmsOptions options = {});

/// s = 3, n = 1 from P = [[1,0,1],[0,1,1]]: the code ([1], [1], [1]).
GhcmsBundle ghcms_trivial();

/// Throws syndrome_not_decodable when the reconstructed Q-part sum is not a
/// column of P.
SourceTuple ghcms_decode(const GhcmsBundle& bundle, const SyndromeTuple& y);

}  // namespace hcms
