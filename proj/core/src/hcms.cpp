#include "hcms/hcms.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "hcms/error.hpp"
#include "hcms/linalg.hpp"

namespace hcms {

namespace {

// [0 | I_h] with n columns
BitMatrix zero_identity(std::size_t h, std::size_t n) {
  BitMatrix t(h, n);
  for (std::size_t r = 0; r < h; ++r) t.set(r, n - h + r);
  return t;
}

BitMatrix sum_of(std::span<const BitMatrix> blocks) {
  BitMatrix acc(blocks.front().rows(), blocks.front().cols());
  for (const auto& b : blocks) acc += b;
  return acc;
}

bool leading_columns_independent(const BitMatrix& m, std::size_t count) {
  return count <= m.cols() && rank(m.col_block(0, count)) == count;
}

}  // namespace

BitMatrix hamming_matrix(std::size_t m) {
  require(m >= 1, Errc::precondition_violation, "Hamming matrix needs at least one row");
  require(m <= 30, Errc::overflow, "2^m - 1 columns is too many for m = " + std::to_string(m));
  const std::size_t cols = (std::size_t{1} << m) - 1;
  BitMatrix p(m, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t value = j + 1;
    for (std::size_t r = 0; r < m; ++r) {
      if ((value >> (m - 1 - r)) & 1U) p.set(r, j);
    }
  }
  return p;
}

bool is_hamming_matrix(const BitMatrix& p) {
  const auto m = p.rows();
  if (m == 0 || m > 30) return false;
  if (p.cols() != (std::size_t{1} << m) - 1) return false;
  std::vector<bool> seen(std::size_t{1} << m, false);
  for (const auto& col : p.columns()) {
    const auto v = col.value_msb_first();
    if (v == 0 || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void validate_hamming_partition(std::span<const BitMatrix> q) {
  require(q.size() >= 2, Errc::not_hamming_partition, "a partition needs at least two blocks");
  for (const auto& b : q) {
    require(b.rows() == q.front().rows() && b.cols() == q.front().cols(),
            Errc::not_hamming_partition, "partition blocks differ in shape");
  }
  require(is_hamming_matrix(hstack(q)), Errc::not_hamming_partition,
          "[Q_1 ... Q_s] is not a Hamming matrix");
  require(sum_of(q).is_zero(), Errc::not_hamming_partition, "Q_1 + ... + Q_s != 0");
}

BitMatrix standard_completion(const BitMatrix& y) {
  const auto echelon = rref(y);
  require(echelon.pivots.size() == y.rows(), Errc::precondition_violation,
          "completion needs a full row rank matrix");
  std::vector<bool> is_pivot(y.cols(), false);
  for (auto p : echelon.pivots) is_pivot[p] = true;
  BitMatrix t(0, y.cols());
  for (std::size_t c = 0; c < y.cols(); ++c) {
    if (!is_pivot[c]) t.append_row(BitVector::unit(y.cols(), c));
  }
  return t;
}

ColumnIndex::ColumnIndex(const BitMatrix& p) : rows_(p.rows()) {
  canonical_ = rows_ >= 1 && rows_ <= 30 && p == hamming_matrix(rows_);
  if (canonical_) return;
  const auto cols = p.columns();
  for (std::size_t j = 0; j < cols.size(); ++j) map_.emplace(cols[j], j);
}

std::optional<std::size_t> ColumnIndex::find(const BitVector& column) const {
  if (column.size() != rows_) return std::nullopt;
  if (canonical_) {
    const auto v = column.value_msb_first();
    if (v == 0) return std::nullopt;
    return static_cast<std::size_t>(v - 1);
  }
  const auto it = map_.find(column);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> default_split(std::size_t rows, std::size_t s) {
  require(s >= 1, Errc::precondition_violation, "split over zero terminals");
  std::vector<std::size_t> out(s, rows / s);
  for (std::size_t i = 0; i < rows % s; ++i) ++out[i];
  return out;
}

HcmsBundle hcms_from_parts(std::vector<BitMatrix> q, BitMatrix t,
                           std::optional<std::vector<std::size_t>> split) {
  require(q.size() > 2, Errc::precondition_violation,
          "the construction needs more than two terminals");
  validate_hamming_partition(q);
  const std::size_t s = q.size();
  const std::size_t r = q.front().rows();
  const std::size_t n = q.front().cols();
  const auto height = static_cast<long long>(n) - static_cast<long long>((s - 1) * r);
  require(height >= 0, Errc::height_negative,
          "required height of T is n - (s-1)(M-n) = " + std::to_string(height));
  if (height == 0 && t.rows() == 0) t = BitMatrix(0, n);
  require(t.rows() == static_cast<std::size_t>(height) && t.cols() == n,
          Errc::dimension_mismatch,
          "T must be " + std::to_string(height) + " x " + std::to_string(n));
  auto rows = split.value_or(default_split(t.rows(), s));
  require(rows.size() == s, Errc::precondition_violation, "split needs one entry per terminal");
  require(std::accumulate(rows.begin(), rows.end(), std::size_t{0}) == t.rows(),
          Errc::precondition_violation, "split does not sum to rows(T)");

  HcmsBundle b;
  b.s = s;
  b.n = n;
  b.M = n + r;
  b.P = hstack(q);
  std::vector<BitMatrix> top(q.begin(), q.end() - 1);
  top.push_back(t);
  b.R = vstack(top);
  try {
    b.R_inv = invert(b.R);
  } catch (const Error& e) {
    if (e.code() != Errc::singular) throw;
    fail(Errc::r_not_invertible, "R = [Q_1; ...; Q_{s-1}; T] is singular");
  }
  std::vector<BitMatrix> h;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < s; ++i) {
    b.G.push_back(t.row_block(offset, rows[i]));
    offset += rows[i];
    h.push_back(vstack({b.G.back(), q[i]}));
  }
  b.code = SwCode(std::move(h));
  b.columns = ColumnIndex(b.P);
  b.Q = std::move(q);
  b.T = std::move(t);
  b.split = std::move(rows);
  return b;
}

BaseCheck check_base_partition() {
  const auto& d = base_data();
  const BitMatrix q[] = {d.q1, d.q2, d.q3};
  BaseCheck c;
  c.hamming = is_hamming_matrix(hstack(q));
  c.sum_zero = sum_of(q).is_zero();
  const auto pivots = rref(vstack({d.q1, d.q2})).pivots;
  std::vector<std::size_t> expected(12);
  std::iota(expected.begin(), expected.end(), std::size_t{0});
  c.pivots = pivots == expected;
  const auto u = d.q1.col_block(0, 12);
  const auto v = d.q2.col_block(0, 12);
  c.v_relation = v == zero_identity(6, 12) + d.k * u;
  c.r_invertible = rank(vstack({d.q1, d.q2, zero_identity(9, 21)})) == 21;
  return c;
}

HcmsBundle hcms_a3(std::optional<std::vector<std::size_t>> split) {
  require(check_base_partition().ok(), Errc::internal, "embedded base partition fails its self-check");
  const auto& d = base_data();
  return hcms_from_parts({d.q1, d.q2, d.q3}, zero_identity(9, 21), std::move(split));
}

bool satisfies_lift_invariant(const TriplePartition& p) {
  const std::size_t r = 2 * p.k;
  if (p.k == 0 || p.k > 15) return false;
  for (const auto* m : {&p.a, &p.b, &p.c}) {
    if (m->rows() != r || m->cols() != p.a.cols()) return false;
  }
  const BitMatrix blocks[] = {p.a, p.b, p.c};
  return is_hamming_matrix(hstack(blocks)) && sum_of(blocks).is_zero() &&
         leading_columns_independent(vstack({p.a, p.b}), 4 * p.k);
}

TriplePartition lift_partition(const TriplePartition& p) {
  require(satisfies_lift_invariant(p), Errc::precondition_violation,
          "partition does not satisfy the lifting invariant");
  const std::size_t r = 2 * p.k;
  const std::size_t cols = p.a.cols();

  // tags 0, u = (1,0), v = (0,1), w = (1,1) as indices 0..3; copy c of an
  // original column carries tag seq[c] in each block. The B and C
  // sequences are exchanged for original columns 2 and 3, otherwise the
  // tagged pivot columns below are dependent.
  constexpr int a_seq[4] = {0, 1, 2, 3};
  constexpr int b_seq[4] = {0, 2, 3, 1};
  constexpr int c_seq[4] = {0, 3, 1, 2};
  struct Slot {
    std::size_t j;  // original column, or cols for the lone tag column
    int copy;
  };
  auto tag_of = [&](const Slot& s, int block) {
    if (s.j == cols) return block + 1;  // lone columns (0;u), (0;v), (0;w)
    const bool exchanged = s.j == 2 || s.j == 3;
    if (block == 0) return a_seq[s.copy];
    if (block == 1) return exchanged ? c_seq[s.copy] : b_seq[s.copy];
    return exchanged ? b_seq[s.copy] : c_seq[s.copy];
  };
  const BitMatrix* src[3] = {&p.a, &p.b, &p.c};
  auto column_of = [&](const Slot& s, int block) {
    BitVector col(r + 2);
    if (s.j < cols) {
      for (std::size_t i = 0; i < r; ++i) col.set(i, src[block]->get(i, s.j));
    }
    const int t = tag_of(s, block);
    col.set(r, t & 1);
    col.set(r + 1, (t >> 1) & 1);
    return col;
  };

  std::vector<Slot> order;
  std::vector<std::vector<bool>> used(cols, std::vector<bool>(4, false));
  auto take = [&](std::size_t j, int copy) {
    order.push_back({j, copy});
    used[j][copy] = true;
  };
  for (std::size_t j = 0; j < 4 * p.k; ++j) take(j, 0);
  take(0, 2);  // A-tag v
  take(1, 3);  // A-tag w
  take(2, 3);  // A-tag w
  take(3, 1);  // A-tag u
  std::vector<std::pair<std::uint64_t, Slot>> rest;
  rest.push_back({column_of({cols, 0}, 0).value_msb_first(), {cols, 0}});
  for (std::size_t j = 0; j < cols; ++j) {
    for (int c = 0; c < 4; ++c) {
      if (used[j][c]) continue;
      const Slot s{j, c};
      rest.push_back({column_of(s, 0).value_msb_first(), s});
    }
  }
  std::sort(rest.begin(), rest.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [key, s] : rest) order.push_back(s);

  TriplePartition out;
  out.k = p.k + 1;
  BitMatrix* dst[3] = {&out.a, &out.b, &out.c};
  for (int block = 0; block < 3; ++block) {
    std::vector<BitVector> columns;
    columns.reserve(order.size());
    for (const auto& s : order) columns.push_back(column_of(s, block));
    *dst[block] = BitMatrix::from_columns(r + 2, columns);
  }
  require(satisfies_lift_invariant(out), Errc::internal, "lifted partition fails the invariant");
  return out;
}

TriplePartition partition_for_a(unsigned a) {
  require(a >= 3, Errc::precondition_violation, "lifting starts from a = 3");
  const auto& d = base_data();
  TriplePartition p{3, d.q1, d.q2, d.q3};
  for (unsigned k = 3; k < a; ++k) p = lift_partition(p);
  return p;
}

HcmsBundle hcms_for_a(unsigned a, std::optional<std::vector<std::size_t>> split, unsigned max_a) {
  const auto params = perfect_params_for_a(a);
  const auto height =
      static_cast<long long>(params.n) - 2 * static_cast<long long>(params.M - params.n);
  require(a >= 3, Errc::height_negative,
          "no HCMS for a = " + std::to_string(a) + ": required height of T is " +
              std::to_string(height));
  require(a <= max_a, Errc::budget_exceeded,
          "a = " + std::to_string(a) + " exceeds the supported maximum " + std::to_string(max_a));
  auto p = partition_for_a(a);
  const auto n = static_cast<std::size_t>(params.n);
  return hcms_from_parts({std::move(p.a), std::move(p.b), std::move(p.c)},
                         zero_identity(n - 4 * a, n), std::move(split));
}

SourceTuple hcms_decode(const HcmsBundle& bundle, const SyndromeTuple& y) {
  const auto s = bundle.s;
  const auto r = bundle.M - bundle.n;
  require(y.parts.size() == s, Errc::dimension_mismatch, "syndrome tuple has the wrong number of parts");
  for (std::size_t i = 0; i < s; ++i) {
    require(y.parts[i].size() == bundle.split[i] + r, Errc::dimension_mismatch,
            "syndrome part " + std::to_string(i) + " has the wrong length");
  }

  BitVector sigma(r);
  for (std::size_t i = 0; i < s; ++i) sigma += y.parts[i].slice(bundle.split[i], r);

  std::optional<Flip> flip;
  std::vector<BitVector> parts = y.parts;
  if (!sigma.is_zero()) {
    const auto j = bundle.columns.find(sigma);
    require(j.has_value(), Errc::syndrome_not_decodable, "Q-part sum is not a column of P");
    flip = Flip{*j / bundle.n, *j % bundle.n};
    parts[flip->terminal] += bundle.code.matrix(flip->terminal).column(flip->position);
  }

  // R b = [Q_1 b; ...; Q_{s-1} b; G_1 b; ...; G_s b]
  std::vector<BitVector> rb;
  rb.reserve(2 * s);
  for (std::size_t i = 0; i + 1 < s; ++i) rb.push_back(parts[i].slice(bundle.split[i], r));
  for (std::size_t i = 0; i < s; ++i) rb.push_back(parts[i].slice(0, bundle.split[i]));
  const auto b = bundle.R_inv * BitVector::concat(rb);
  return compose(s, b, flip);
}

std::optional<std::vector<BitMatrix>> search_sum_zero_partition(std::size_t s, std::size_t r,
                                                                std::uint64_t seed,
                                                                std::size_t attempts) {
  require(s >= 3, Errc::precondition_violation, "sum-zero partitions need s >= 3");
  require(r >= 1 && r <= 24, Errc::budget_exceeded, "r out of the supported range 1..24");
  const std::uint64_t total = (std::uint64_t{1} << r) - 1;
  if (total % s != 0) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(total / s);

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> values(total);
  std::iota(values.begin(), values.end(), std::uint64_t{1});

  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::shuffle(values.begin(), values.end(), rng);
    std::vector<bool> used(total + 1, false);
    std::vector<std::vector<std::uint64_t>> groups;
    bool ok = true;
    for (const auto lead : values) {
      if (used[lead]) continue;
      // pick s - 2 more unused values at random; the last one is forced
      bool placed = false;
      std::uniform_int_distribution<std::uint64_t> pick(1, total);
      for (int tries = 0; tries < 256 && !placed; ++tries) {
        std::vector<std::uint64_t> g{lead};
        std::uint64_t acc = lead;
        auto taken = [&](std::uint64_t x) {
          return used[x] || std::find(g.begin(), g.end(), x) != g.end();
        };
        bool fine = true;
        for (std::size_t m = 0; m + 2 < s && fine; ++m) {
          std::uint64_t x = pick(rng);
          for (int k = 0; k < 64 && taken(x); ++k) x = pick(rng);
          if (taken(x)) fine = false;
          g.push_back(x);
          acc ^= x;
        }
        if (!fine || acc == 0 || taken(acc)) continue;
        g.push_back(acc);
        for (auto x : g) used[x] = true;
        groups.push_back(std::move(g));
        placed = true;
      }
      if (!placed) {
        ok = false;
        break;
      }
    }
    if (!ok || groups.size() != n) continue;

    std::vector<BitMatrix> q(s, BitMatrix(r, n));
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t row = 0; row < r; ++row) {
          if ((groups[p][i] >> (r - 1 - row)) & 1U) q[i].set(row, p);
        }
      }
    }
    validate_hamming_partition(q);
    return q;
  }
  return std::nullopt;
}

}  // namespace hcms
