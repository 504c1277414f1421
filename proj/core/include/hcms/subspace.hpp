#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hcms/bit_matrix.hpp"
#include "hcms/bit_vector.hpp"

namespace hcms {

/// A subspace of GF(2)^n held by its reduced row echelon basis. The basis
/// is unique per subspace, so operator== is subspace equality. The zero
/// subspace has a 0 x n basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : basis_(0, ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, std::span<const BitVector> vectors);
  static Subspace row_space(const BitMatrix& m);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  const BitMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Canonical coset representative of v modulo this subspace: v with
  /// every pivot coordinate cleared.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const;
  bool contains(const Subspace& other) const;

  /// The element with basis coefficients given by the low dim() bits.
  BitVector element(std::uint64_t coefficients) const;
  /// All 2^dim elements; refuses dim > 30.
  std::vector<BitVector> elements() const;

  /// Surjective matrix whose null space is this subspace (canonical basis
  /// of the orthogonal complement).
  BitMatrix annihilator() const;

  std::string to_string() const { return basis_.to_string(); }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  BitMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace sum(std::span<const Subspace> parts);
/// a ∩ b = {0}
bool is_direct(const Subspace& a, const Subspace& b);
/// B with a ⊕ B = within, obtained greedily from within's basis vectors.
/// Throws not_a_subspace when a is not contained in within.
Subspace complement(const Subspace& a, const Subspace& within);
/// Complement of a inside the whole ambient space.
Subspace complement(const Subspace& a);

}  // namespace hcms
