#include "hcms/subspace.hpp"

#include <bit>

#include "hcms/error.hpp"
#include "hcms/linalg.hpp"

namespace hcms {

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_space(BitMatrix::identity(ambient_dim));
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const BitVector> vectors) {
  return row_space(BitMatrix::from_rows(ambient_dim,
                                        std::vector<BitVector>(vectors.begin(), vectors.end())));
}

Subspace Subspace::row_space(const BitMatrix& m) {
  auto echelon = rref(m);
  Subspace s(m.cols());
  s.basis_ = echelon.reduced.row_block(0, echelon.pivots.size());
  s.pivots_ = std::move(echelon.pivots);
  return s;
}

BitVector Subspace::reduce(BitVector v) const {
  require(v.size() == ambient_dim(), Errc::dimension_mismatch,
          "vector length does not match ambient dimension");
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    if (v.test(pivots_[k])) v += basis_.row(k);
  }
  return v;
}

bool Subspace::contains(const BitVector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  require(other.ambient_dim() == ambient_dim(), Errc::dimension_mismatch,
          "subspaces live in different ambient spaces");
  for (const auto& r : other.basis_.row_vectors()) {
    if (!contains(r)) return false;
  }
  return true;
}

BitVector Subspace::element(std::uint64_t coefficients) const {
  BitVector v(ambient_dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    if ((coefficients >> k) & 1U) v += basis_.row(k);
  }
  return v;
}

std::vector<BitVector> Subspace::elements() const {
  require(dim() <= 30, Errc::budget_exceeded, "refusing to list more than 2^30 elements");
  const std::uint64_t count = std::uint64_t{1} << dim();
  std::vector<BitVector> out;
  out.reserve(count);
  BitVector cur(ambient_dim());
  out.push_back(cur);
  // Gray code walk: step i flips basis vector countr_zero(i)
  for (std::uint64_t i = 1; i < count; ++i) {
    cur += basis_.row(static_cast<std::size_t>(std::countr_zero(i)));
    out.push_back(cur);
  }
  return out;
}

BitMatrix Subspace::annihilator() const { return null_space(basis_).basis(); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), Errc::dimension_mismatch,
          "intersect: ambient dimensions differ");
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
  return null_space(vstack({a.annihilator(), b.annihilator()}));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), Errc::dimension_mismatch,
          "sum: ambient dimensions differ");
  return Subspace::row_space(vstack({a.basis(), b.basis()}));
}

Subspace sum(std::span<const Subspace> parts) {
  require(!parts.empty(), Errc::precondition_violation, "sum of no subspaces");
  std::vector<BitMatrix> bases;
  bases.reserve(parts.size());
  for (const auto& p : parts) {
    require(p.ambient_dim() == parts.front().ambient_dim(), Errc::dimension_mismatch,
            "sum: ambient dimensions differ");
    bases.push_back(p.basis());
  }
  return Subspace::row_space(vstack(bases));
}

bool is_direct(const Subspace& a, const Subspace& b) {
  return sum(a, b).dim() == a.dim() + b.dim();
}

Subspace complement(const Subspace& a, const Subspace& within) {
  require(within.contains(a), Errc::not_a_subspace,
          "complement requires the subspace to lie inside the enclosing space");
  // incremental xor basis seeded with a; rows are kept reduced against
  // earlier rows, so one in-order pass decides membership
  std::vector<BitVector> reducer;
  std::vector<std::size_t> lead;
  auto reduce = [&](BitVector v) {
    for (std::size_t k = 0; k < reducer.size(); ++k) {
      if (v.test(lead[k])) v += reducer[k];
    }
    return v;
  };
  auto insert = [&](BitVector v) {
    lead.push_back(*v.lowest_set());
    reducer.push_back(std::move(v));
  };
  for (const auto& r : a.basis().row_vectors()) insert(reduce(r));

  std::vector<BitVector> picked;
  for (const auto& w : within.basis().row_vectors()) {
    auto r = reduce(w);
    if (r.is_zero()) continue;
    picked.push_back(w);
    insert(std::move(r));
  }
  return Subspace::span(a.ambient_dim(), picked);
}

Subspace complement(const Subspace& a) {
  return complement(a, Subspace::full(a.ambient_dim()));
}

}  // namespace hcms
