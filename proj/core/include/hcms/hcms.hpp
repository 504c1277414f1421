#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hcms/bit_matrix.hpp"
#include "hcms/codec.hpp"
#include "hcms/sources.hpp"

namespace hcms {

/// m x (2^m - 1) matrix of all nonzero columns, in ascending order of the
/// column value read with row 0 as the most significant bit.
BitMatrix hamming_matrix(std::size_t m);

/// Every nonzero m-bit column appears exactly once.
bool is_hamming_matrix(const BitMatrix& p);

/// Throws not_hamming_partition unless [Q_1 ... Q_s] is a Hamming matrix
/// and Q_1 + ... + Q_s = 0.
void validate_hamming_partition(std::span<const BitMatrix> q);

/// Rows e_c for the non-pivot columns c of y, so that [y; T] is invertible.
/// Requires y to have full row rank.
BitMatrix standard_completion(const BitMatrix& y);

/// Maps a column of P back to its index.
class ColumnIndex {
 public:
  ColumnIndex() = default;
  explicit ColumnIndex(const BitMatrix& p);

  bool canonical() const noexcept { return canonical_; }
  std::optional<std::size_t> find(const BitVector& column) const;

 private:
  bool canonical_ = false;
  std::size_t rows_ = 0;
  std::unordered_map<BitVector, std::size_t, BitVectorHash> map_;
};

struct HcmsBundle {
  std::size_t s = 0;
  std::size_t n = 0;
  std::size_t M = 0;
  BitMatrix P;
  std::vector<BitMatrix> Q;
  BitMatrix T;
  std::vector<std::size_t> split;  // rows(G_i)
  std::vector<BitMatrix> G;
  BitMatrix R;
  BitMatrix R_inv;
  SwCode code;  // H_i = [G_i; Q_i]
  ColumnIndex columns;
};

/// As equal as possible, earlier terminals taking the extra rows.
std::vector<std::size_t> default_split(std::size_t rows, std::size_t s);

/// Validates the partition, the height n - (s-1)(M-n) of T, the split and
/// the invertibility of R = [Q_1; ...; Q_{s-1}; T], in that order.
HcmsBundle hcms_from_parts(std::vector<BitMatrix> q, BitMatrix t,
                           std::optional<std::vector<std::size_t>> split = std::nullopt);

/// The embedded base partition for n = 21, M = 27.
struct BaseData {
  BitMatrix q1, q2, q3;
  BitMatrix k;  // V = [0 | I_6] + K U on the leading 12 columns
};
const BaseData& base_data();

struct BaseCheck {
  bool hamming = false;
  bool sum_zero = false;
  bool pivots = false;     // [Q_1; Q_2] has pivots on columns 0..11
  bool v_relation = false;
  bool r_invertible = false;
  bool ok() const noexcept { return hamming && sum_zero && pivots && v_relation && r_invertible; }
};
BaseCheck check_base_partition();

/// n = 21, M = 27 bundle with T = [0 | I_9]; default split (3, 3, 3).
/// Throws internal when the embedded data fails its self-check.
HcmsBundle hcms_a3(std::optional<std::vector<std::size_t>> split = std::nullopt);

/// Three-block sum-zero partition of a 2k-bit Hamming matrix whose first
/// two blocks stacked have pivots on the first 4k columns.
struct TriplePartition {
  std::size_t k = 0;
  BitMatrix a, b, c;
};

bool satisfies_lift_invariant(const TriplePartition& p);
/// Partition for k + 1 built from p by tagging with the two extra rows.
/// Throws precondition_violation when p fails the invariant.
TriplePartition lift_partition(const TriplePartition& p);
/// Base partition lifted a - 3 times. Requires a >= 3.
TriplePartition partition_for_a(unsigned a);

/// Bundle for n = (4^a - 1)/3, M = n + 2a with T = [0 | I_{n-4a}].
/// Throws height_negative for a < 3 and budget_exceeded for a > max_a.
HcmsBundle hcms_for_a(unsigned a, std::optional<std::vector<std::size_t>> split = std::nullopt,
                      unsigned max_a = 7);

/// Algebraic decoder. Throws syndrome_not_decodable when the Q-part sum is
/// not a column of P.
SourceTuple hcms_decode(const HcmsBundle& bundle, const SyndromeTuple& y);

/// Bounded randomized search for a sum-zero partition of the r-bit Hamming
/// matrix into s blocks of (2^r - 1)/s columns. nullopt when no attempt
/// succeeds or s does not divide 2^r - 1.
std::optional<std::vector<BitMatrix>> search_sum_zero_partition(std::size_t s, std::size_t r,
                                                                std::uint64_t seed,
                                                                std::size_t attempts);

}  // namespace hcms
