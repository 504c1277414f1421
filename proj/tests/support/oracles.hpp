#pragma once

// Brute-force references the algebraic code paths are checked against.
// Everything here enumerates; keep the inputs small.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "hcms/bit_matrix.hpp"
#include "hcms/bit_vector.hpp"
#include "hcms/codec.hpp"
#include "hcms/sources.hpp"
#include "hcms/subspace.hpp"

namespace hcms::oracle {

inline BitVector stacked(const SourceTuple& x) { return BitVector::concat(x.blocks); }

/// Pairwise syndrome comparison over all of S.
inline std::optional<Collision> find_collision(const SwCode& code) {
  const HammingSourceSet set(code.terminals(), code.length());
  std::unordered_map<BitVector, std::uint64_t, BitVectorHash> seen;
  std::optional<Collision> hit;
  for (std::uint64_t i = 0; i < set.size() && !hit; ++i) {
    const auto x = set.at(i);
    const auto y = encode(code, x).concatenated();
    const auto [it, fresh] = seen.emplace(y, i);
    if (!fresh) hit = Collision{set.at(it->second), x};
  }
  return hit;
}

inline bool compressible(const SwCode& code) { return !find_collision(code).has_value(); }

/// {x + x' : x != x' in S} as concatenated sn-bit vectors.
inline std::set<BitVector> difference_set(std::size_t s, std::size_t n) {
  const HammingSourceSet set(s, n);
  std::vector<BitVector> all;
  for (std::uint64_t i = 0; i < set.size(); ++i) all.push_back(stacked(set.at(i)));
  std::set<BitVector> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) out.insert(all[i] + all[j]);
  }
  return out;
}

/// The same set written out by pattern: (c, ..., c) + u where u is zero,
/// one unit vector, or two distinct unit vectors, each unit vector sitting
/// in a block i < s'. The zero tuple is excluded.
inline std::set<BitVector> pattern_set(std::size_t s, std::size_t n) {
  const std::size_t sp = effective_terminals(s);
  std::vector<BitVector> units;
  for (std::size_t i = 0; i < sp; ++i) {
    for (std::size_t p = 0; p < n; ++p) units.push_back(BitVector::unit(s * n, i * n + p));
  }
  std::vector<BitVector> patterns{BitVector(s * n)};
  for (std::size_t a = 0; a < units.size(); ++a) {
    patterns.push_back(units[a]);
    for (std::size_t b = a + 1; b < units.size(); ++b) patterns.push_back(units[a] + units[b]);
  }
  std::set<BitVector> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    const auto block = BitVector::from_value(n, c);
    const auto common = BitVector::concat(std::vector<BitVector>(s, block));
    for (const auto& u : patterns) {
      auto d = common + u;
      if (!d.is_zero()) out.insert(std::move(d));
    }
  }
  return out;
}

/// rank by counting the row space: 2^rank distinct combinations.
inline std::size_t rank(const BitMatrix& m) {
  std::set<BitVector> span;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << m.rows()); ++c) {
    BitVector v(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if ((c >> r) & 1U) v += m.row(r);
    }
    span.insert(v);
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

/// Every x with m x = 0.
inline std::set<BitVector> kernel(const BitMatrix& m) {
  std::set<BitVector> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << m.cols()); ++c) {
    const auto x = BitVector::from_value(m.cols(), c);
    if ((m * x).is_zero()) out.insert(x);
  }
  return out;
}

inline std::set<BitVector> elements(const Subspace& s) {
  const auto e = s.elements();
  return {e.begin(), e.end()};
}

/// A complement of a inside within, picked at random rather than greedily.
template <class Rng>
Subspace random_complement(const Subspace& a, const Subspace& within, Rng& rng) {
  auto acc = a;
  std::vector<BitVector> picked;
  while (acc.dim() < within.dim()) {
    BitVector v(within.ambient_dim());
    for (std::size_t k = 0; k < within.dim(); ++k) {
      if (rng() & 1U) v += within.basis().row(k);
    }
    if (acc.contains(v)) continue;
    picked.push_back(v);
    const BitVector one[] = {v};
    acc = sum(acc, Subspace::span(within.ambient_dim(), one));
  }
  return Subspace::span(within.ambient_dim(), picked);
}

}  // namespace hcms::oracle
