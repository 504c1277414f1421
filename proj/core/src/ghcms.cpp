#include "hcms/ghcms.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "hcms/error.hpp"
#include "hcms/linalg.hpp"

namespace hcms {

std::vector<std::size_t> GhcmsBundle::row_dims() const {
  std::vector<std::size_t> out;
  for (const auto& c : C) out.push_back(c.rows());
  return out;
}

void validate_ghcms_partition(std::span<const BitMatrix> q) {
  if (q.size() != 2) {
    validate_hamming_partition(q);
    return;
  }
  require(q[0] == q[1], Errc::not_hamming_partition, "two-terminal partition needs Q_1 = Q_2");
  require(is_hamming_matrix(q[0]), Errc::not_hamming_partition,
          "two-terminal partition needs Q_1 to be a Hamming matrix");
}

GhcmsBundle ghcms_build(std::vector<BitMatrix> q, GhcmsOptions options) {
  validate_ghcms_partition(q);
  GhcmsBundle b;
  b.s = q.size();
  b.r = q.front().rows();
  b.n = q.front().cols();

  b.C = options.c ? std::move(*options.c) : std::vector<BitMatrix>{};
  if (b.C.empty()) {
    for (const auto& qi : q) b.C.push_back(row_basis(qi));
  }
  require(b.C.size() == b.s, Errc::precondition_violation, "need one C_i per terminal");
  for (std::size_t i = 0; i < b.s; ++i) {
    auto t = row_basis_transforms(q[i], b.C[i]);
    b.E.push_back(std::move(t.expand));
    b.D.push_back(std::move(t.select));
  }

  const std::vector<BitMatrix> upper(q.begin(), q.end() - 1);
  const auto stack = vstack(upper);
  b.Y = row_basis(stack);
  auto ty = row_basis_transforms(stack, b.Y);
  b.E_Y = std::move(ty.expand);
  b.D_Y = std::move(ty.select);

  b.T = options.t ? std::move(*options.t) : standard_completion(b.Y);
  require(b.T.cols() == b.n && b.Y.rows() + b.T.rows() == b.n, Errc::dimension_mismatch,
          "T must have n - rank(Y) rows and n columns");
  b.R = vstack({b.Y, b.T});
  try {
    b.R_inv = invert(b.R);
  } catch (const Error& e) {
    if (e.code() != Errc::singular) throw;
    fail(Errc::r_not_invertible, "[Y; T] is singular");
  }

  b.split = options.split.value_or(default_split(b.T.rows(), b.s));
  require(b.split.size() == b.s, Errc::precondition_violation, "split needs one entry per terminal");
  require(std::accumulate(b.split.begin(), b.split.end(), std::size_t{0}) == b.T.rows(),
          Errc::precondition_violation, "split does not sum to rows(T)");

  std::vector<BitMatrix> h;
  std::size_t offset = 0;
  std::size_t sum_d = 0;
  for (std::size_t i = 0; i < b.s; ++i) {
    b.G.push_back(b.T.row_block(offset, b.split[i]));
    offset += b.split[i];
    h.push_back(vstack({b.G.back(), b.C[i]}));
    sum_d += b.C[i].rows();
  }
  b.code = SwCode(std::move(h));
  b.M = b.code.total_rows();
  b.perfect = sum_d + (b.n - b.Y.rows()) == b.n + b.r;

  b.P = b.s == 2 ? q.front() : hstack(q);
  b.columns = ColumnIndex(b.P);
  b.Q = std::move(q);
  b.hamming_order = std::move(options.hamming_order);
  require(b.hamming_order.empty() ||
              b.P.permute_columns(b.hamming_order) == hamming_matrix(b.r),
          Errc::precondition_violation, "recorded column order does not reach canonical form");
  return b;
}

GhcmsBundle ghcms_trivial() {
  const auto p = BitMatrix::from_strings({"101", "011"});
  return ghcms_build({p.col_block(0, 1), p.col_block(1, 1), p.col_block(2, 1)});
}

// Q_i x_i = E_i C_i x_i; their sum is P (v_1; ...; v_s), with the two-terminal
// case reading P as a single block and attributing the flip to terminal 0.
SourceTuple ghcms_decode(const GhcmsBundle& bundle, const SyndromeTuple& y) {
  const auto s = bundle.s;
  require(y.parts.size() == s, Errc::dimension_mismatch, "syndrome tuple has the wrong number of parts");
  for (std::size_t i = 0; i < s; ++i) {
    require(y.parts[i].size() == bundle.code.rows(i), Errc::dimension_mismatch,
            "syndrome part " + std::to_string(i) + " has the wrong length");
  }
  auto c_part = [&](const std::vector<BitVector>& parts, std::size_t i) {
    return parts[i].slice(bundle.split[i], bundle.C[i].rows());
  };

  BitVector sigma(bundle.r);
  for (std::size_t i = 0; i < s; ++i) sigma += bundle.E[i] * c_part(y.parts, i);

  std::optional<Flip> flip;
  std::vector<BitVector> parts = y.parts;
  if (!sigma.is_zero()) {
    const auto j = bundle.columns.find(sigma);
    require(j.has_value(), Errc::syndrome_not_decodable, "Q-part sum is not a column of P");
    flip = Flip{*j / bundle.n, *j % bundle.n};
    parts[flip->terminal] += bundle.code.matrix(flip->terminal).column(flip->position);
  }

  std::vector<BitVector> upper;
  for (std::size_t i = 0; i + 1 < s; ++i) upper.push_back(bundle.E[i] * c_part(parts, i));
  std::vector<BitVector> rb{bundle.D_Y * BitVector::concat(upper)};
  for (std::size_t i = 0; i < s; ++i) rb.push_back(parts[i].slice(0, bundle.split[i]));
  const auto b = bundle.R_inv * BitVector::concat(rb);

  // reject syndromes outside the image rather than returning a wrong tuple
  auto x = compose(s, b, flip);
  require(encode(bundle.code, x) == y, Errc::syndrome_not_decodable,
          "syndrome is not the image of a Hamming source");
  return x;
}

}  // namespace hcms
