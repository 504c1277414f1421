#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hcms/bit_matrix.hpp"
#include "hcms/codec.hpp"
#include "hcms/ghcms.hpp"
#include "hcms/subspace.hpp"

namespace hcms {

/// Surjective matrix with null space N: the canonical annihilator. {0}
/// gives the identity, the whole space a 0 x n matrix.
BitMatrix matrix_with_null_space(const Subspace& n);

/// Moves the common part K of the null spaces between terminals. On entry
/// K lies in every null space except that of `gains`, which meets K only
/// in 0. On exit K lies in every null space except that of `loses`, whose
/// null space becomes `residual` (default: a greedy complement of K in it).
/// Terminals whose null space is unchanged keep their matrix, reduced to a
/// row basis when it is not surjective. Throws decomposition_invalid when
/// the subspace conditions fail and not_compressible for a code that does
/// not compress S.
SwCode shift_null_space(const SwCode& code, const Subspace& k, std::size_t gains, std::size_t loses,
                        std::optional<Subspace> residual = std::nullopt);

struct TwoSourceForm {
  BitMatrix invertible;            // n x n, null space {0}
  BitMatrix hamming;               // m x n, 2^m = n + 1, distinct nonzero columns
  std::vector<std::size_t> order;  // hamming.permute_columns(order) is canonical
  SwCode code() const { return SwCode({invertible, hamming}); }
};

/// Shifts all of null H_1 onto the second terminal. Throws not_perfect.
TwoSourceForm two_source_reduce(const SwCode& code);

/// ∩_{j != i} null H_j
Subspace exclusive_intersection(const NullProfile& profile, std::size_t i);

struct Normalization {
  SwCode code;
  std::vector<Subspace> moved;  // R_i, shifted onto terminal i (i < s)
  Subspace residual;            // N_s, what stays with the last terminal
  /// dim ∩_{j < s} null H_j after normalization; reported, not constrained.
  std::size_t last_exclusive_dim = 0;
};

/// Equivalent code with ∩_{j != i} null H_j = {0} for every i < s.
/// Throws not_perfect.
Normalization normalize_profile(const SwCode& code);

/// (X, J) on length sn: X = banded [I I 0 ...; 0 I I ...], J = diag(H_i).
/// Requires a perfect code with s >= 3 and checks the result is perfect.
SwCode lift_to_two_source(const SwCode& code);

using SyndromeDecoder = std::function<SourceTuple(const SyndromeTuple&)>;

/// Decodes a syndrome of lift_to_two_source(original) through a decoder of
/// the original code. The returned pair is (B, B + V).
SourceTuple lifted_decode(const SwCode& original, const SyndromeTuple& y,
                          const SyndromeDecoder& inner);

struct Reduction {
  GhcmsBundle bundle;
  Normalization normalization;
  NullProfile before;
  NullProfile after;
  std::vector<std::string> log;
};

/// Rebuilds a perfect code as a generalized HCMS with the same null spaces
/// as its normalized form. Throws not_perfect; internal failures are bugs.
Reduction reduce_to_ghcms(const SwCode& code);

}  // namespace hcms
