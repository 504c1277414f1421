#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcms/bit_matrix.hpp"
#include "hcms/codec.hpp"
#include "hcms/ghcms.hpp"
#include "hcms/hcms.hpp"
#include "hcms/sources.hpp"

namespace hcms {

// Matrix: a "rows cols" line, then one line of cols characters from {0,1}
// per row. Tuple files: one line per block, tuples separated by a blank
// line, "-" for an empty block.

void write_matrix(std::ostream& out, const BitMatrix& m);
BitMatrix read_matrix(std::istream& in);

void write_tuples(std::ostream& out, std::span<const std::vector<BitVector>> tuples);
std::vector<std::vector<BitVector>> read_tuples(std::istream& in);

void write_sources(std::ostream& out, std::span<const SourceTuple> xs);
std::vector<SourceTuple> read_sources(std::istream& in);
void write_syndromes(std::ostream& out, std::span<const SyndromeTuple> ys);
std::vector<SyndromeTuple> read_syndromes(std::istream& in);

/// "s n", then "m_1 ... m_s", then the s matrices.
void write_code(std::ostream& out, const SwCode& code);
/// Code followed by the labelled sections P, Q_i, T, G_i, R.
void write_bundle(std::ostream& out, const HcmsBundle& b);
/// The HCMS sections plus C_i, Y, D_i, E_i, D_Y, E_Y and the canonical
/// column order of P when one was recorded.
void write_bundle(std::ostream& out, const GhcmsBundle& b);

/// A bundle file as written, before any validation beyond syntax.
struct RawBundle {
  SwCode code;
  std::vector<std::pair<std::string, BitMatrix>> sections;
  std::vector<std::size_t> hamming_order;

  const BitMatrix* find(const std::string& label) const;
};

RawBundle parse_bundle(std::istream& in);

enum class BundleKind { code, hcms, ghcms };

struct Bundle {
  BundleKind kind = BundleKind::code;
  SwCode code;
  std::optional<HcmsBundle> hcms;
  std::optional<GhcmsBundle> ghcms;
};

/// Rebuilds the construction from its defining sections (Q_i, T, G_i and,
/// for GHCMS, C_i) and requires every stored matrix, the code included, to
/// match. Construction errors propagate; mismatches throw malformed_input.
Bundle rebuild(const RawBundle& raw);
Bundle read_bundle(std::istream& in);

}  // namespace hcms
