#include "hcms/equiv.hpp"

#include <string>
#include <utility>

#include "hcms/error.hpp"
#include "hcms/linalg.hpp"

namespace hcms {

namespace {

std::string dims_text(const NullProfile& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.terminals(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.spaces[i].dim());
  }
  return out + ")";
}

// order[v - 1] = index of the column with value v, for a matrix whose
// columns are distinct and nonzero
std::vector<std::size_t> canonical_order(const BitMatrix& p) {
  require(is_hamming_matrix(p), Errc::internal, "matrix does not have Hamming columns");
  std::vector<std::size_t> order(p.cols());
  const auto cols = p.columns();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    order[cols[j].value_msb_first() - 1] = j;
  }
  return order;
}

}  // namespace

BitMatrix matrix_with_null_space(const Subspace& n) { return n.annihilator(); }

SwCode shift_null_space(const SwCode& code, const Subspace& k, std::size_t gains, std::size_t loses,
                        std::optional<Subspace> residual) {
  const auto s = code.terminals();
  require(gains < s && loses < s, Errc::precondition_violation, "terminal index out of range");
  require(k.ambient_dim() == code.length(), Errc::dimension_mismatch,
          "K lives in the wrong ambient space");
  require(is_compressible(code), Errc::not_compressible, "null space shifting needs a code that compresses S");

  const auto before = profile_of(code);
  for (std::size_t i = 0; i < s; ++i) {
    if (i == gains) continue;
    require(before.spaces[i].contains(k), Errc::decomposition_invalid,
            "K is not contained in null H_" + std::to_string(i + 1));
  }
  require(intersect(k, before.spaces[gains]).is_zero(), Errc::decomposition_invalid,
          "K meets null H_" + std::to_string(gains + 1) + " nontrivially");

  auto after = before;
  if (gains != loses) {
    after.spaces[gains] = sum(k, before.spaces[gains]);
    if (residual) {
      require(residual->ambient_dim() == code.length() && is_direct(k, *residual) &&
                  sum(k, *residual) == before.spaces[loses],
              Errc::decomposition_invalid,
              "residual is not a complement of K in null H_" + std::to_string(loses + 1));
      after.spaces[loses] = std::move(*residual);
    } else {
      after.spaces[loses] = complement(k, before.spaces[loses]);
    }
  }

  std::vector<BitMatrix> h;
  h.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    const auto& old = code.matrix(i);
    if (after.spaces[i] == before.spaces[i]) {
      h.push_back(rank(old) == old.rows() ? old : row_basis(old));
    } else {
      h.push_back(matrix_with_null_space(after.spaces[i]));
    }
  }
  return SwCode(std::move(h));
}

TwoSourceForm two_source_reduce(const SwCode& code) {
  require(code.terminals() == 2, Errc::precondition_violation, "two-source reduction needs s = 2");
  require(is_perfect(code), Errc::not_perfect, "code is not a perfect compression");
  const auto n = code.length();
  const auto shifted =
      shift_null_space(code, null_space(code.matrix(0)), 1, 0, Subspace::zero(n));
  TwoSourceForm out{shifted.matrix(0), shifted.matrix(1), {}};
  require(out.invertible.rows() == n && rank(out.invertible) == n, Errc::internal,
          "first matrix is not invertible after the shift");
  out.order = canonical_order(out.hamming);
  return out;
}

Subspace exclusive_intersection(const NullProfile& profile, std::size_t i) {
  require(profile.terminals() >= 2 && i < profile.terminals(), Errc::precondition_violation,
          "exclusive intersection needs at least two terminals");
  auto acc = Subspace::full(profile.spaces.front().ambient_dim());
  for (std::size_t j = 0; j < profile.terminals(); ++j) {
    if (j != i) acc = intersect(acc, profile.spaces[j]);
  }
  return acc;
}

Normalization normalize_profile(const SwCode& code) {
  require(is_perfect(code), Errc::not_perfect, "code is not a perfect compression");
  const auto s = code.terminals();
  const auto profile = profile_of(code);

  Normalization out;
  std::size_t total = 0;
  for (std::size_t i = 0; i + 1 < s; ++i) {
    out.moved.push_back(exclusive_intersection(profile, i));
    total += out.moved.back().dim();
  }
  const auto moved_sum = sum(out.moved);
  require(moved_sum.dim() == total && profile.spaces[s - 1].contains(moved_sum), Errc::internal,
          "R_1 + ... + R_{s-1} is not a direct sum inside null H_s");
  out.residual = complement(moved_sum, profile.spaces[s - 1]);

  auto cur = code;
  for (std::size_t i = 0; i + 1 < s; ++i) {
    if (out.moved[i].is_zero()) continue;
    std::vector<Subspace> keep{out.residual};
    keep.insert(keep.end(), out.moved.begin() + static_cast<std::ptrdiff_t>(i) + 1, out.moved.end());
    cur = shift_null_space(cur, out.moved[i], i, s - 1, sum(keep));
  }

  const auto after = profile_of(cur);
  for (std::size_t i = 0; i + 1 < s; ++i) {
    require(exclusive_intersection(after, i).is_zero(), Errc::internal,
            "normalization left a nonzero exclusive intersection");
  }
  out.last_exclusive_dim = exclusive_intersection(after, s - 1).dim();
  out.code = std::move(cur);
  return out;
}

SwCode lift_to_two_source(const SwCode& code) {
  const auto s = code.terminals();
  const auto n = code.length();
  require(s >= 3, Errc::precondition_violation, "lifting needs at least three terminals");
  require(is_perfect(code), Errc::not_perfect, "code is not a perfect compression");
  BitMatrix x((s - 1) * n, s * n);
  for (std::size_t k = 0; k + 1 < s; ++k) {
    for (std::size_t t = 0; t < n; ++t) {
      x.set(k * n + t, k * n + t);
      x.set(k * n + t, (k + 1) * n + t);
    }
  }
  SwCode lifted({std::move(x), block_diagonal(code.matrices())});
  require(is_perfect(lifted), Errc::internal, "lifted two-source code is not perfect");
  return lifted;
}

SourceTuple lifted_decode(const SwCode& original, const SyndromeTuple& y,
                          const SyndromeDecoder& inner) {
  const auto s = original.terminals();
  const auto n = original.length();
  require(y.parts.size() == 2 && y.parts[0].size() == (s - 1) * n &&
              y.parts[1].size() == original.total_rows(),
          Errc::dimension_mismatch, "syndrome does not match the lifted code");

  // e_i = b_1 + b_i from the chained sums b_k + b_{k+1}
  std::vector<BitVector> e{BitVector(n)};
  for (std::size_t k = 0; k + 1 < s; ++k) e.push_back(e.back() + y.parts[0].slice(k * n, n));

  SyndromeTuple folded;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < s; ++i) {
    const auto& h = original.matrix(i);
    folded.parts.push_back(y.parts[1].slice(offset, h.rows()) + h * e[i]);
    offset += h.rows();
  }
  const auto parts = decompose(inner(folded));
  require(parts.has_value(), Errc::syndrome_not_decodable, "inner decoder returned a non-member of S");

  std::vector<BitVector> blocks;
  for (std::size_t i = 0; i < s; ++i) blocks.push_back(parts->base + e[i]);
  const auto base = BitVector::concat(blocks);
  auto flipped = base;
  if (parts->flip) flipped.flip(parts->flip->terminal * n + parts->flip->position);
  return SourceTuple{{base, flipped}};
}

Reduction reduce_to_ghcms(const SwCode& code) {
  require(is_perfect(code), Errc::not_perfect, "code is not a perfect compression");
  Reduction out;
  out.before = profile_of(code);
  out.log.push_back("input null dims " + dims_text(out.before));

  out.normalization = normalize_profile(code);
  const auto& h = out.normalization.code;
  const auto profile = profile_of(h);
  const auto s = h.terminals();
  const auto n = h.length();
  for (std::size_t i = 0; i + 1 < s; ++i) {
    const auto d = out.normalization.moved[i].dim();
    if (d == 0) continue;
    out.log.push_back("shift dim " + std::to_string(d) + " from terminal " + std::to_string(s) +
                      " to terminal " + std::to_string(i + 1));
  }
  out.log.push_back("normalized null dims " + dims_text(profile));
  out.log.push_back("last exclusive intersection dim " +
                    std::to_string(out.normalization.last_exclusive_dim));

  std::vector<BitMatrix> q;
  Subspace null_y;
  if (s == 2) {
    // the lift is not perfect for two terminals; null H_1 already is the
    // null space of a Hamming matrix
    const auto p = matrix_with_null_space(profile.spaces[0]);
    q = {p, p};
    null_y = profile.spaces[0];
    out.log.push_back("two-terminal code: P taken from null H_1");
  } else {
    const auto lifted = lift_to_two_source(h);
    const auto null_x = null_space(lifted.matrix(0));
    const auto null_j = null_space(lifted.matrix(1));
    require(is_direct(null_x, null_j), Errc::internal, "null X and null J intersect");
    const auto p = matrix_with_null_space(sum(null_x, null_j));
    out.log.push_back("lifted to (X, J); P is " + std::to_string(p.rows()) + " x " +
                      std::to_string(p.cols()));
    require(is_hamming_matrix(p), Errc::internal, "P does not have Hamming columns");
    for (std::size_t i = 0; i < s; ++i) q.push_back(p.col_block(i * n, n));
    for (std::size_t j = 0; j + 1 < s; ++j) {
      require(null_space(q[j]) == profile.spaces[j], Errc::internal,
              "null Q_" + std::to_string(j + 1) + " != null H_" + std::to_string(j + 1));
    }
    const std::vector<BitMatrix> upper(q.begin(), q.end() - 1);
    null_y = null_space(vstack(upper));
    require(is_direct(profile.spaces[s - 1], null_y) &&
                null_space(q[s - 1]) == sum(profile.spaces[s - 1], null_y),
            Errc::internal, "null Q_s != null H_s + null Y");
  }

  const auto a = complement(sum(profile.spaces[s - 1], null_y));
  const auto t = matrix_with_null_space(sum(profile.spaces[s - 1], a));
  out.log.push_back("complement A has dim " + std::to_string(a.dim()) + "; T is " +
                    std::to_string(t.rows()) + " x " + std::to_string(t.cols()));

  const auto order = canonical_order(s == 2 ? q.front() : hstack(q));
  std::vector<std::size_t> split(s, 0);
  split.back() = t.rows();
  GhcmsOptions options;
  options.t = t;
  options.split = split;
  options.hamming_order = order;
  out.bundle = ghcms_build(std::move(q), std::move(options));

  out.after = profile_of(out.bundle.code);
  require(out.after == profile, Errc::internal, "GHCMS null spaces differ from the normalized code");
  require(is_perfect(out.bundle.code), Errc::internal, "GHCMS code is not perfect");
  out.log.push_back("GHCMS null dims " + dims_text(out.after));
  return out;
}

}  // namespace hcms
