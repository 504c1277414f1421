#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hcms/bit_vector.hpp"

namespace hcms {

/// One length-n block per terminal.
struct SourceTuple {
  std::vector<BitVector> blocks;

  std::size_t terminals() const noexcept { return blocks.size(); }
  std::size_t length() const noexcept { return blocks.empty() ? 0 : blocks.front().size(); }

  friend bool operator==(const SourceTuple&, const SourceTuple&) = default;
};

/// The single type-1 correlation of a Hamming source: terminal `terminal`
/// sees the common block with bit `position` flipped.
struct Flip {
  std::size_t terminal;
  std::size_t position;

  friend bool operator==(const Flip&, const Flip&) = default;
};

/// (b; terminal; position) form of an S member: x_i = b + v_i with at most
/// one v_i = e_position nonzero. For two terminals the flip is always
/// attributed to terminal 0, the representation the enumeration uses.
struct HammingSourceParts {
  BitVector base;
  std::optional<Flip> flip;

  friend bool operator==(const HammingSourceParts&, const HammingSourceParts&) = default;
};

inline constexpr std::uint64_t default_enumeration_budget = std::uint64_t{1} << 26;

/// Budget taken from the HCMS_BUDGET environment variable when it holds a
/// positive integer, `fallback` otherwise.
std::uint64_t budget_from_env(std::uint64_t fallback);

/// s' = s for s > 2, s' = 1 for s = 2.
std::size_t effective_terminals(std::size_t s);

/// |S| = (s' n + 1) 2^n. Throws overflow instead of wrapping.
std::uint64_t hamming_source_size(std::size_t s, std::size_t n);

SourceTuple compose(std::size_t s, const BitVector& base, std::optional<Flip> flip);
std::optional<HammingSourceParts> decompose(const SourceTuple& x);
bool is_hamming_source(const SourceTuple& x);

/// Random-access view of S in its fixed enumeration order: the 2^n type-0
/// tuples for b = 0, 1, ... (b read with position 0 most significant),
/// then for each b, each terminal i < s', each position p, the tuple with
/// v_i = e_p.
class HammingSourceSet {
 public:
  /// Throws budget_exceeded when |S| > budget.
  HammingSourceSet(std::size_t s, std::size_t n,
                   std::uint64_t budget = default_enumeration_budget);

  std::size_t terminals() const noexcept { return s_; }
  std::size_t length() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  HammingSourceParts parts_at(std::uint64_t index) const;
  SourceTuple at(std::uint64_t index) const;
  std::optional<std::uint64_t> index_of(const SourceTuple& x) const;

  template <class F>
  void for_each(F&& visit) const {
    for (std::uint64_t i = 0; i < size_; ++i) visit(i, at(i));
  }

 private:
  std::size_t s_;
  std::size_t n_;
  std::uint64_t size_;
};

/// 2^n (s' n + 1) = 2^M, decided exactly.
bool is_perfect_params(std::size_t s, std::uint64_t n, std::uint64_t M);

struct PerfectParams {
  std::uint64_t n;
  std::uint64_t M;
  friend bool operator==(const PerfectParams&, const PerfectParams&) = default;
};

/// Three-terminal perfect parameters n = (4^a - 1)/3, M = n + 2a.
PerfectParams perfect_params_for_a(unsigned a);

/// Null-space dimension pattern of a perfect three-terminal code: c for
/// the pairwise-intersection part, u >= v >= w for the residuals.
struct Cuvw {
  std::int64_t c;
  std::int64_t u;
  std::int64_t v;
  std::int64_t w;
  friend bool operator==(const Cuvw&, const Cuvw&) = default;
};

/// The four candidate rows for (n, M), dropping rows with a negative entry.
std::vector<Cuvw> feasible_cuvw(std::int64_t n, std::int64_t M);

}  // namespace hcms
