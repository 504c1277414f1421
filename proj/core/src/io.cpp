#include "hcms/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hcms/error.hpp"

namespace hcms {

namespace {

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::string expect_line(std::istream& in, const std::string& what) {
  std::string line;
  require(next_line(in, line), Errc::malformed_input, "unexpected end of input reading " + what);
  return line;
}

bool is_blank(const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; }

std::vector<std::size_t> parse_counts(const std::string& line, const std::string& what) {
  std::istringstream ss(line);
  std::vector<std::size_t> out;
  long long v = 0;
  while (ss >> v) {
    require(v >= 0, Errc::malformed_input, "negative count in " + what);
    out.push_back(static_cast<std::size_t>(v));
  }
  require(ss.eof(), Errc::malformed_input, "non-numeric token in " + what + ": '" + line + "'");
  return out;
}

BitVector parse_bits(const std::string& line, const std::string& what) {
  if (line == "-") return BitVector(0);
  require(line.find_first_not_of("01") == std::string::npos, Errc::malformed_input,
          what + " holds characters other than 0 and 1: '" + line + "'");
  return BitVector::from_string(line);
}

void write_labelled(std::ostream& out, const std::string& label, const BitMatrix& m) {
  out << label << '\n';
  write_matrix(out, m);
}

void expect_same(const BitMatrix& stored, const BitMatrix& rebuilt, const std::string& label) {
  require(stored == rebuilt, Errc::malformed_input,
          "section " + label + " does not match the matrix rebuilt from the construction");
}

std::vector<BitMatrix> indexed(const RawBundle& raw, const std::string& prefix, std::size_t s) {
  std::vector<BitMatrix> out;
  for (std::size_t i = 1; i <= s; ++i) {
    const auto* m = raw.find(prefix + std::to_string(i));
    require(m != nullptr, Errc::malformed_input, "missing section " + prefix + std::to_string(i));
    out.push_back(*m);
  }
  return out;
}

const BitMatrix& section(const RawBundle& raw, const std::string& label) {
  const auto* m = raw.find(label);
  require(m != nullptr, Errc::malformed_input, "missing section " + label);
  return *m;
}

}  // namespace

void write_matrix(std::ostream& out, const BitMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (const auto& r : m.row_vectors()) out << r.to_string() << '\n';
}

BitMatrix read_matrix(std::istream& in) {
  std::string header;
  do {
    header = expect_line(in, "matrix header");
  } while (is_blank(header));
  const auto dims = parse_counts(header, "matrix header");
  require(dims.size() == 2, Errc::malformed_input, "matrix header must be 'rows cols': '" + header + "'");
  BitMatrix m(dims[0], dims[1]);
  for (std::size_t r = 0; r < dims[0]; ++r) {
    const auto line = expect_line(in, "matrix row");
    require(line.size() == dims[1], Errc::malformed_input,
            "matrix row " + std::to_string(r) + " has " + std::to_string(line.size()) +
                " characters, expected " + std::to_string(dims[1]));
    m.set_row(r, parse_bits(line, "matrix row"));
  }
  return m;
}

void write_tuples(std::ostream& out, std::span<const std::vector<BitVector>> tuples) {
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    if (k) out << '\n';
    for (const auto& v : tuples[k]) out << (v.empty() ? std::string("-") : v.to_string()) << '\n';
  }
}

std::vector<std::vector<BitVector>> read_tuples(std::istream& in) {
  std::vector<std::vector<BitVector>> out;
  std::vector<BitVector> cur;
  std::string line;
  while (next_line(in, line)) {
    if (is_blank(line)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur.push_back(parse_bits(line, "tuple line"));
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

void write_sources(std::ostream& out, std::span<const SourceTuple> xs) {
  std::vector<std::vector<BitVector>> t;
  for (const auto& x : xs) t.push_back(x.blocks);
  write_tuples(out, t);
}

std::vector<SourceTuple> read_sources(std::istream& in) {
  std::vector<SourceTuple> out;
  for (auto& t : read_tuples(in)) out.push_back(SourceTuple{std::move(t)});
  return out;
}

void write_syndromes(std::ostream& out, std::span<const SyndromeTuple> ys) {
  std::vector<std::vector<BitVector>> t;
  for (const auto& y : ys) t.push_back(y.parts);
  write_tuples(out, t);
}

std::vector<SyndromeTuple> read_syndromes(std::istream& in) {
  std::vector<SyndromeTuple> out;
  for (auto& t : read_tuples(in)) out.push_back(SyndromeTuple{std::move(t)});
  return out;
}

void write_code(std::ostream& out, const SwCode& code) {
  out << code.terminals() << ' ' << code.length() << '\n';
  const auto m = code.row_counts();
  for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m[i];
  out << '\n';
  for (const auto& h : code.matrices()) write_matrix(out, h);
}

void write_bundle(std::ostream& out, const HcmsBundle& b) {
  write_code(out, b.code);
  write_labelled(out, "P", b.P);
  for (std::size_t i = 0; i < b.s; ++i) write_labelled(out, "Q_" + std::to_string(i + 1), b.Q[i]);
  write_labelled(out, "T", b.T);
  for (std::size_t i = 0; i < b.s; ++i) write_labelled(out, "G_" + std::to_string(i + 1), b.G[i]);
  write_labelled(out, "R", b.R);
}

void write_bundle(std::ostream& out, const GhcmsBundle& b) {
  write_code(out, b.code);
  write_labelled(out, "P", b.P);
  for (std::size_t i = 0; i < b.s; ++i) write_labelled(out, "Q_" + std::to_string(i + 1), b.Q[i]);
  write_labelled(out, "T", b.T);
  for (std::size_t i = 0; i < b.s; ++i) write_labelled(out, "G_" + std::to_string(i + 1), b.G[i]);
  write_labelled(out, "R", b.R);
  for (std::size_t i = 0; i < b.s; ++i) write_labelled(out, "C_" + std::to_string(i + 1), b.C[i]);
  write_labelled(out, "Y", b.Y);
  for (std::size_t i = 0; i < b.s; ++i) write_labelled(out, "D_" + std::to_string(i + 1), b.D[i]);
  for (std::size_t i = 0; i < b.s; ++i) write_labelled(out, "E_" + std::to_string(i + 1), b.E[i]);
  write_labelled(out, "D_Y", b.D_Y);
  write_labelled(out, "E_Y", b.E_Y);
  if (!b.hamming_order.empty()) {
    out << "order\n" << b.hamming_order.size();
    for (auto j : b.hamming_order) out << ' ' << j;
    out << '\n';
  }
}

const BitMatrix* RawBundle::find(const std::string& label) const {
  for (const auto& [name, m] : sections) {
    if (name == label) return &m;
  }
  return nullptr;
}

RawBundle parse_bundle(std::istream& in) {
  std::string line;
  do {
    line = expect_line(in, "bundle header");
  } while (is_blank(line));
  const auto head = parse_counts(line, "bundle header");
  require(head.size() == 2, Errc::malformed_input, "bundle header must be 's n': '" + line + "'");
  const auto rows = parse_counts(expect_line(in, "row counts"), "row counts");
  require(rows.size() == head[0], Errc::malformed_input,
          "expected " + std::to_string(head[0]) + " row counts");
  std::vector<BitMatrix> h;
  for (std::size_t i = 0; i < head[0]; ++i) {
    auto m = read_matrix(in);
    require(m.rows() == rows[i] && m.cols() == head[1], Errc::malformed_input,
            "coding matrix " + std::to_string(i + 1) + " does not match the header");
    h.push_back(std::move(m));
  }
  RawBundle raw{SwCode(std::move(h)), {}, {}};

  while (next_line(in, line)) {
    if (is_blank(line)) continue;
    if (line == "order") {
      const auto v = parse_counts(expect_line(in, "order"), "order");
      require(!v.empty() && v.size() == v[0] + 1, Errc::malformed_input, "order line is malformed");
      raw.hamming_order.assign(v.begin() + 1, v.end());
      continue;
    }
    require(line.find(' ') == std::string::npos, Errc::malformed_input,
            "expected a section label, got '" + line + "'");
    require(raw.find(line) == nullptr, Errc::malformed_input, "duplicate section " + line);
    auto m = read_matrix(in);
    raw.sections.emplace_back(line, std::move(m));
  }
  return raw;
}

Bundle rebuild(const RawBundle& raw) {
  Bundle out;
  out.code = raw.code;
  if (raw.sections.empty()) return out;
  const auto s = raw.code.terminals();
  auto q = indexed(raw, "Q_", s);
  const auto g = indexed(raw, "G_", s);
  std::vector<std::size_t> split;
  for (const auto& gi : g) split.push_back(gi.rows());
  const auto& t = section(raw, "T");

  auto check_common = [&](const auto& b) {
    require(b.code == raw.code, Errc::malformed_input,
            "coding matrices do not match the construction sections");
    expect_same(section(raw, "P"), b.P, "P");
    expect_same(t, b.T, "T");
    expect_same(section(raw, "R"), b.R, "R");
    for (std::size_t i = 0; i < s; ++i) expect_same(g[i], b.G[i], "G_" + std::to_string(i + 1));
  };

  if (raw.find("C_1") != nullptr) {
    GhcmsOptions options;
    options.c = indexed(raw, "C_", s);
    options.t = t;
    options.split = split;
    options.hamming_order = raw.hamming_order;
    auto b = ghcms_build(std::move(q), std::move(options));
    check_common(b);
    expect_same(section(raw, "Y"), b.Y, "Y");
    const std::vector<BitMatrix> upper(b.Q.begin(), b.Q.end() - 1);
    require(section(raw, "D_Y") * vstack(upper) == b.Y, Errc::malformed_input,
            "section D_Y does not map the stacked Q_i onto Y");
    expect_same(section(raw, "E_Y"), b.E_Y, "E_Y");
    const auto d = indexed(raw, "D_", s);
    const auto e = indexed(raw, "E_", s);
    for (std::size_t i = 0; i < s; ++i) {
      // any D_i reproducing C_i is acceptable; E_i is unique
      require(d[i] * b.Q[i] == b.C[i], Errc::malformed_input,
              "section D_" + std::to_string(i + 1) + " does not map Q_i onto C_i");
      expect_same(e[i], b.E[i], "E_" + std::to_string(i + 1));
    }
    out.kind = BundleKind::ghcms;
    out.ghcms = std::move(b);
    return out;
  }

  auto b = hcms_from_parts(std::move(q), t, split);
  check_common(b);
  out.kind = BundleKind::hcms;
  out.hcms = std::move(b);
  return out;
}

Bundle read_bundle(std::istream& in) { return rebuild(parse_bundle(in)); }

}  // namespace hcms
