#include "hcms/codec.hpp"

#include <string>
#include <utility>

#include "hcms/error.hpp"
#include "hcms/linalg.hpp"

namespace hcms {

SwCode::SwCode(std::vector<BitMatrix> matrices) : matrices_(std::move(matrices)) {
  require(matrices_.size() >= 2, Errc::precondition_violation,
          "a code needs at least two terminals");
  const auto n = matrices_.front().cols();
  require(n >= 1, Errc::precondition_violation, "block length must be positive");
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    require(matrices_[i].cols() == n, Errc::dimension_mismatch,
            "coding matrix " + std::to_string(i) + " has " +
                std::to_string(matrices_[i].cols()) + " columns, expected " + std::to_string(n));
  }
}

std::size_t SwCode::total_rows() const noexcept {
  std::size_t m = 0;
  for (const auto& h : matrices_) m += h.rows();
  return m;
}

std::vector<std::size_t> SwCode::row_counts() const {
  std::vector<std::size_t> out;
  out.reserve(matrices_.size());
  for (const auto& h : matrices_) out.push_back(h.rows());
  return out;
}

BitMatrix SwCode::stacked() const { return vstack(matrices_); }

SyndromeTuple encode(const SwCode& code, const SourceTuple& x) {
  require(x.terminals() == code.terminals(), Errc::dimension_mismatch,
          "source tuple has " + std::to_string(x.terminals()) + " blocks, code has " +
              std::to_string(code.terminals()) + " terminals");
  SyndromeTuple y;
  y.parts.reserve(code.terminals());
  for (std::size_t i = 0; i < code.terminals(); ++i) {
    require(x.blocks[i].size() == code.length(), Errc::dimension_mismatch,
            "source block " + std::to_string(i) + " has the wrong length");
    y.parts.push_back(code.matrix(i) * x.blocks[i]);
  }
  return y;
}

std::vector<std::size_t> NullProfile::dims() const {
  std::vector<std::size_t> out;
  out.reserve(spaces.size());
  for (const auto& s : spaces) out.push_back(s.dim());
  return out;
}

NullProfile profile_of(const SwCode& code) {
  NullProfile p;
  p.spaces.reserve(code.terminals());
  for (const auto& h : code.matrices()) p.spaces.push_back(null_space(h));
  return p;
}

SwCode code_from_profile(const NullProfile& profile) {
  std::vector<BitMatrix> h;
  h.reserve(profile.terminals());
  for (const auto& s : profile.spaces) h.push_back(s.annihilator());
  return SwCode(std::move(h));
}

// Two members of S collide iff some nonzero (c + u_1, ..., c + u_s) with
// u = v + v' lies in null H_1 x ... x null H_s. With H the stacked matrix
// and z(u) = (H_1 u_1; ...; H_s u_s), a pattern u is realisable iff
// H c = z(u) is solvable, i.e. iff L z(u) = sum_i F_i u_i = 0 for the left
// kernel L of H and F_i = L_i H_i. Once null H = {0}, the single
// type-1 patterns need column f_{i,p} = 0 and the pairs need
// f_{i,p} = f_{j,q}, so compressibility is: rank H = n and the columns of
// F_1..F_{s'} are nonzero and pairwise distinct. For s = 2 the second
// terminal is redundant (F_1 + F_2 = 0) and only F_1 is inspected.
CompressibilityReport check_compressible(const SwCode& code) {
  const auto s = code.terminals();
  const auto n = code.length();
  CompressibilityReport report;
  report.ranks.reserve(s);
  bool full_row_rank = true;
  for (const auto& h : code.matrices()) {
    report.ranks.push_back(rank(h));
    full_row_rank = full_row_rank && report.ranks.back() == h.rows();
  }

  const auto stacked = code.stacked();
  const LinearSolver solver(stacked);
  report.stacked_rank = solver.rank();

  if (solver.rank() < n) {
    const auto c = null_space(stacked).basis().row(0);
    report.counterexample =
        Collision{compose(s, c, std::nullopt), compose(s, BitVector(n), std::nullopt)};
    return report;
  }

  const auto kernel = solver.left_kernel();
  const auto sp = effective_terminals(s);
  std::vector<std::size_t> offset(s + 1, 0);
  for (std::size_t i = 0; i < s; ++i) offset[i + 1] = offset[i] + code.rows(i);

  // right-hand side of H c = z(u) for a pattern u with ones at (i, p) and (j, q)
  auto pattern_rhs = [&](Flip a, std::optional<Flip> b) {
    BitVector z(stacked.rows());
    auto add = [&](Flip f) {
      const auto col = code.matrix(f.terminal).column(f.position);
      for (std::size_t r = 0; r < col.size(); ++r) {
        if (col.test(r)) z.flip(offset[f.terminal] + r);
      }
    };
    add(a);
    if (b) add(*b);
    return z;
  };
  auto base_for = [&](Flip a, std::optional<Flip> b) {
    auto c = solver.solve(pattern_rhs(a, b));
    require(c.has_value(), Errc::internal, "compressibility: pattern system unexpectedly inconsistent");
    return std::move(*c);
  };

  std::unordered_map<BitVector, Flip, BitVectorHash> seen;
  for (std::size_t i = 0; i < sp; ++i) {
    const auto f = kernel.col_block(offset[i], code.rows(i)) * code.matrix(i);
    for (std::size_t p = 0; p < n; ++p) {
      const Flip here{i, p};
      auto col = f.column(p);
      if (col.is_zero()) {
        const auto c = base_for(here, std::nullopt);
        report.counterexample =
            Collision{compose(s, c, here), compose(s, BitVector(n), std::nullopt)};
        return report;
      }
      auto [it, inserted] = seen.emplace(std::move(col), here);
      if (!inserted) {
        const Flip other = it->second;
        const auto c = base_for(here, other);
        report.counterexample = Collision{compose(s, c, here), compose(s, BitVector(n), other)};
        return report;
      }
    }
  }

  report.compressible = true;
  report.perfect = full_row_rank && is_perfect_params(s, n, code.total_rows());
  return report;
}

bool is_compressible(const SwCode& code) { return check_compressible(code).compressible; }

bool is_perfect(const SwCode& code) { return check_compressible(code).perfect; }

TableDecoder::TableDecoder(const SwCode& code, std::uint64_t budget)
    : code_(code), sources_(code.terminals(), code.length(), budget) {
  require(sources_.size() <= budget, Errc::budget_exceeded, "table decoder budget exceeded");
  table_.reserve(static_cast<std::size_t>(sources_.size()));
  for (std::uint64_t k = 0; k < sources_.size(); ++k) {
    auto key = encode(code_, sources_.at(k)).concatenated();
    auto [it, inserted] = table_.emplace(std::move(key), k);
    require(inserted, Errc::not_compressible,
            "source tuples " + std::to_string(it->second) + " and " + std::to_string(k) +
                " share a syndrome");
  }
}

SourceTuple TableDecoder::decode(const SyndromeTuple& y) const {
  require(y.parts.size() == code_.terminals(), Errc::dimension_mismatch,
          "syndrome tuple has the wrong number of parts");
  for (std::size_t i = 0; i < y.parts.size(); ++i) {
    require(y.parts[i].size() == code_.rows(i), Errc::dimension_mismatch,
            "syndrome part " + std::to_string(i) + " has the wrong length");
  }
  const auto it = table_.find(y.concatenated());
  require(it != table_.end(), Errc::not_in_image, "no Hamming source has this syndrome");
  return sources_.at(it->second);
}

}  // namespace hcms
