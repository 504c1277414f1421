#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "hcms/bit_matrix.hpp"
#include "hcms/bit_vector.hpp"
#include "hcms/sources.hpp"
#include "hcms/subspace.hpp"

namespace hcms {

template <class Rng>
BitVector random_vector(std::size_t n, Rng& rng) {
  BitVector v(n);
  auto words = v.words();
  for (auto& w : words) w = static_cast<std::uint64_t>(rng());
  if (n % BitVector::word_bits != 0 && !words.empty()) {
    words.back() &= (std::uint64_t{1} << (n % BitVector::word_bits)) - 1;
  }
  return v;
}

template <class Rng>
BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, random_vector(cols, rng));
  return m;
}

/// Uniform over the members of S.
template <class Rng>
SourceTuple random_source(std::size_t s, std::size_t n, Rng& rng) {
  const std::uint64_t flips = effective_terminals(s) * n;
  std::uniform_int_distribution<std::uint64_t> pick(0, flips);
  const auto k = pick(rng);
  const auto base = random_vector(n, rng);
  if (k == flips) return compose(s, base, std::nullopt);
  return compose(s, base, Flip{static_cast<std::size_t>(k / n), static_cast<std::size_t>(k % n)});
}

/// Random subspace of `within` with the given dimension (clamped to
/// dim(within)), built from random combinations of its basis.
template <class Rng>
Subspace random_subspace(const Subspace& within, std::size_t dim, Rng& rng) {
  if (dim > within.dim()) dim = within.dim();
  auto acc = Subspace::zero(within.ambient_dim());
  while (acc.dim() < dim) {
    const auto coeffs = random_vector(within.dim(), rng);
    BitVector v(within.ambient_dim());
    for (std::size_t k = 0; k < within.dim(); ++k) {
      if (coeffs.test(k)) v += within.basis().row(k);
    }
    if (acc.contains(v)) continue;
    const BitVector one[] = {v};
    acc = sum(acc, Subspace::span(within.ambient_dim(), one));
  }
  return acc;
}

template <class Rng>
Subspace random_subspace(std::size_t ambient, std::size_t dim, Rng& rng) {
  return random_subspace(Subspace::full(ambient), dim, rng);
}

}  // namespace hcms
