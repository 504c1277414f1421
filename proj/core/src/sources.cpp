#include "hcms/sources.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "hcms/error.hpp"

namespace hcms {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t u64_max = std::numeric_limits<std::uint64_t>::max();

void check_terminals(std::size_t s) {
  require(s >= 2, Errc::precondition_violation, "at least two terminals are required");
}

}  // namespace

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("HCMS_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return fallback;
  return static_cast<std::uint64_t>(v);
}

std::size_t effective_terminals(std::size_t s) {
  check_terminals(s);
  return s == 2 ? 1 : s;
}

std::uint64_t hamming_source_size(std::size_t s, std::size_t n) {
  const auto sp = effective_terminals(s);
  require(n >= 1, Errc::precondition_violation, "block length must be positive");
  require(n < 64, Errc::overflow, "|S| does not fit in 64 bits for n = " + std::to_string(n));
  const u128 size = (u128{sp} * n + 1) << n;
  require(size <= u64_max, Errc::overflow,
          "|S| does not fit in 64 bits for s = " + std::to_string(s) +
              ", n = " + std::to_string(n));
  return static_cast<std::uint64_t>(size);
}

SourceTuple compose(std::size_t s, const BitVector& base, std::optional<Flip> flip) {
  check_terminals(s);
  SourceTuple x{std::vector<BitVector>(s, base)};
  if (flip) {
    require(flip->terminal < s && flip->position < base.size(), Errc::precondition_violation,
            "flip outside the tuple");
    x.blocks[flip->terminal].flip(flip->position);
  }
  return x;
}

std::optional<HammingSourceParts> decompose(const SourceTuple& x) {
  const auto s = x.terminals();
  if (s < 2) return std::nullopt;
  const auto n = x.length();
  for (const auto& b : x.blocks) {
    if (b.size() != n) return std::nullopt;
  }

  // the common block is the one shared by at least s - 1 terminals; for
  // two terminals the second block is taken as the base
  const BitVector* base = nullptr;
  if (s == 2 || x.blocks[0] != x.blocks[1]) {
    base = &x.blocks[s == 2 ? 1 : 2];
  } else {
    base = &x.blocks[0];
  }

  HammingSourceParts parts{*base, std::nullopt};
  for (std::size_t i = 0; i < s; ++i) {
    if (x.blocks[i] == *base) continue;
    if (parts.flip) return std::nullopt;
    const auto diff = x.blocks[i] + *base;
    if (diff.weight() != 1) return std::nullopt;
    parts.flip = Flip{i, *diff.lowest_set()};
  }
  return parts;
}

bool is_hamming_source(const SourceTuple& x) { return decompose(x).has_value(); }

HammingSourceSet::HammingSourceSet(std::size_t s, std::size_t n, std::uint64_t budget)
    : s_(s), n_(n), size_(hamming_source_size(s, n)) {
  require(size_ <= budget, Errc::budget_exceeded,
          "|S| = " + std::to_string(size_) + " exceeds the enumeration budget " +
              std::to_string(budget));
}

HammingSourceParts HammingSourceSet::parts_at(std::uint64_t index) const {
  require(index < size_, Errc::precondition_violation, "source index out of range");
  const std::uint64_t type0 = std::uint64_t{1} << n_;
  if (index < type0) return {BitVector::from_value(n_, index), std::nullopt};
  const std::uint64_t per_base = effective_terminals(s_) * n_;
  const std::uint64_t rest = index - type0;
  const std::uint64_t within = rest % per_base;
  return {BitVector::from_value(n_, rest / per_base),
          Flip{static_cast<std::size_t>(within / n_), static_cast<std::size_t>(within % n_)}};
}

SourceTuple HammingSourceSet::at(std::uint64_t index) const {
  const auto parts = parts_at(index);
  return compose(s_, parts.base, parts.flip);
}

std::optional<std::uint64_t> HammingSourceSet::index_of(const SourceTuple& x) const {
  if (x.terminals() != s_ || x.length() != n_) return std::nullopt;
  const auto parts = decompose(x);
  if (!parts) return std::nullopt;
  const std::uint64_t b = parts->base.value_msb_first();
  if (!parts->flip) return b;
  const std::uint64_t per_base = effective_terminals(s_) * n_;
  return (std::uint64_t{1} << n_) + b * per_base + parts->flip->terminal * n_ +
         parts->flip->position;
}

bool is_perfect_params(std::size_t s, std::uint64_t n, std::uint64_t M) {
  const auto sp = effective_terminals(s);
  if (M < n) return false;
  const u128 lhs = u128{sp} * n + 1;
  const std::uint64_t e = M - n;
  if (e >= 128) return false;
  return lhs == (u128{1} << e);
}

PerfectParams perfect_params_for_a(unsigned a) {
  require(a >= 1, Errc::precondition_violation, "a must be positive");
  require(a <= 31, Errc::overflow, "n(a) does not fit in 64 bits for a = " + std::to_string(a));
  const std::uint64_t n = ((std::uint64_t{1} << (2 * a)) - 1) / 3;
  const std::uint64_t M = n + 2 * a;
  require(M % 3 == 0, Errc::internal, "M(a) is not divisible by 3");
  return {n, M};
}

std::vector<Cuvw> feasible_cuvw(std::int64_t n, std::int64_t M) {
  const std::int64_t c0 = 3 * n - 2 * M;
  const std::int64_t h = M - n;
  const Cuvw rows[] = {
      {c0 + 3, h - 2, h - 2, h - 2},
      {c0 + 2, h - 1, h - 1, h - 2},
      {c0 + 1, h, h - 1, h - 1},
      {c0, h, h, h},
  };
  std::vector<Cuvw> out;
  for (const auto& r : rows) {
    if (r.c >= 0 && r.u >= 0 && r.v >= 0 && r.w >= 0) out.push_back(r);
  }
  return out;
}

}  // namespace hcms
