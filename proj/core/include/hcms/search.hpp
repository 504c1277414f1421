#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hcms/codec.hpp"
#include "hcms/subspace.hpp"

namespace hcms {

/// Number of d-dimensional subspaces of GF(2)^n, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t d);

/// A null space can only serve a compressible code if it holds no nonzero
/// vector of weight 1 or 2.
bool is_admissible_null_space(const Subspace& space);

/// Every admissible d-dimensional subspace of GF(2)^n in canonical order.
/// Throws budget_exceeded when more than `budget` subspaces would be visited.
std::vector<Subspace> admissible_subspaces(std::size_t n, std::size_t d, std::uint64_t budget);

struct SearchOptions {
  std::uint64_t budget = std::uint64_t{1} << 24;
  unsigned jobs = 1;
};

struct DimensionAssignment {
  std::size_t d[3];
  bool admissible;  // every d_i has at least one admissible null space
};

struct SearchStats {
  std::vector<std::uint64_t> admissible_by_dim;  // index d
  std::vector<DimensionAssignment> assignments;
  std::uint64_t triples_tested = 0;
  std::uint64_t triples_passed = 0;
};

struct SearchResult {
  std::vector<NullProfile> profiles;  // sorted by the canonical order of their bases
  SearchStats stats;
};

/// Exhaustive search for perfect three-terminal codes at (n, M), assuming
/// full-rank coding matrices so that d_1 + d_2 + d_3 = 3n - M. Every
/// dimension assignment is tried; each null space is drawn from the
/// admissible list and each triple is decided with the exact
/// compressibility test. Throws params_not_perfect when 2^n (3n + 1) != 2^M.
SearchResult search_perfect_null_spaces(std::size_t n, std::size_t M, SearchOptions options = {});

}  // namespace hcms
