#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hcms/bit_matrix.hpp"
#include "hcms/bit_vector.hpp"
#include "hcms/sources.hpp"
#include "hcms/subspace.hpp"

namespace hcms {

/// Syndrome-based Slepian-Wolf code: terminal i compresses its length-n
/// block x_i to y_i = H_i x_i.
class SwCode {
 public:
  SwCode() = default;
  /// Requires s >= 2 matrices with a common, positive column count.
  explicit SwCode(std::vector<BitMatrix> matrices);

  std::size_t terminals() const noexcept { return matrices_.size(); }
  std::size_t length() const noexcept { return matrices_.empty() ? 0 : matrices_.front().cols(); }
  std::size_t rows(std::size_t i) const { return matrices_.at(i).rows(); }
  /// M, the total syndrome length.
  std::size_t total_rows() const noexcept;
  std::vector<std::size_t> row_counts() const;

  const BitMatrix& matrix(std::size_t i) const { return matrices_.at(i); }
  const std::vector<BitMatrix>& matrices() const noexcept { return matrices_; }
  /// [H_1; ...; H_s]
  BitMatrix stacked() const;

  friend bool operator==(const SwCode&, const SwCode&) = default;

 private:
  std::vector<BitMatrix> matrices_;
};

struct SyndromeTuple {
  std::vector<BitVector> parts;

  /// All parts joined end to end.
  BitVector concatenated() const { return BitVector::concat(parts); }

  friend bool operator==(const SyndromeTuple&, const SyndromeTuple&) = default;
};

SyndromeTuple encode(const SwCode& code, const SourceTuple& x);

/// The null spaces of a code's matrices. Compressibility depends on
/// nothing else.
struct NullProfile {
  std::vector<Subspace> spaces;

  std::size_t terminals() const noexcept { return spaces.size(); }
  std::vector<std::size_t> dims() const;

  friend bool operator==(const NullProfile&, const NullProfile&) = default;
};

NullProfile profile_of(const SwCode& code);
/// Code whose matrix i is the canonical surjective matrix with null space
/// spaces[i].
SwCode code_from_profile(const NullProfile& profile);

/// Two distinct members of S with equal syndromes.
struct Collision {
  SourceTuple x;
  SourceTuple x_prime;
};

struct CompressibilityReport {
  bool compressible = false;
  bool perfect = false;
  std::vector<std::size_t> ranks;
  std::size_t stacked_rank = 0;
  std::optional<Collision> counterexample;
};

/// Exact decision of injectivity of the encoder on S, plus the perfectness
/// verdict: compressible, every H_i of full row rank, and
/// 2^n (s' n + 1) = 2^M. Runs one elimination of the stacked matrix.
CompressibilityReport check_compressible(const SwCode& code);
bool is_compressible(const SwCode& code);
bool is_perfect(const SwCode& code);

inline constexpr std::uint64_t default_table_budget = std::uint64_t{1} << 24;

/// Lookup-table decoder over all of S. Building it throws budget_exceeded
/// when |S| > budget and not_compressible on the first collision.
class TableDecoder {
 public:
  explicit TableDecoder(const SwCode& code, std::uint64_t budget = default_table_budget);

  std::uint64_t size() const noexcept { return sources_.size(); }
  /// Throws not_in_image when no member of S has syndrome y.
  SourceTuple decode(const SyndromeTuple& y) const;

 private:
  SwCode code_;
  HammingSourceSet sources_;
  std::unordered_map<BitVector, std::uint64_t, BitVectorHash> table_;
};

}  // namespace hcms
