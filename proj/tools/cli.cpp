#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hcms/codec.hpp"
#include "hcms/equiv.hpp"
#include "hcms/error.hpp"
#include "hcms/ghcms.hpp"
#include "hcms/hcms.hpp"
#include "hcms/io.hpp"
#include "hcms/linalg.hpp"
#include "hcms/random.hpp"
#include "hcms/search.hpp"
#include "hcms/sources.hpp"

namespace hcms::cli {

namespace {

// key=value in --kv mode, "key: value" otherwise
class Report {
 public:
  Report(std::ostream& out, bool kv) : out_(out), kv_(kv) {}

  template <class T>
  void field(const std::string& key, const T& value) {
    out_ << key << (kv_ ? "=" : ": ") << value << '\n';
  }
  void flag(const std::string& key, bool value) { field(key, value ? "true" : "false"); }
  void line(const std::string& text) { out_ << text << '\n'; }
  bool kv() const noexcept { return kv_; }
  std::ostream& stream() noexcept { return out_; }

 private:
  std::ostream& out_;
  bool kv_;
};

std::string join(const std::vector<std::size_t>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::malformed_input, "cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  require(out.good(), Errc::malformed_input, "cannot open '" + path + "' for writing");
  return out;
}

// writes to the file when a path is given, otherwise to out
template <class F>
void emit(const std::string& path, std::ostream& out, F&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  auto file = open_out(path);
  write(file);
  require(file.good(), Errc::malformed_input, "failed writing '" + path + "'");
}

std::string tuple_text(const SourceTuple& x) {
  std::string out;
  for (std::size_t i = 0; i < x.blocks.size(); ++i) {
    if (i) out += ' ';
    out += x.blocks[i].to_string();
  }
  return out;
}

using Decoder = std::function<SourceTuple(const SyndromeTuple&)>;

std::optional<Decoder> algebraic_decoder(const Bundle& b) {
  if (b.hcms) {
    const auto* h = &*b.hcms;
    return Decoder([h](const SyndromeTuple& y) { return hcms_decode(*h, y); });
  }
  if (b.ghcms) {
    const auto* g = &*b.ghcms;
    return Decoder([g](const SyndromeTuple& y) { return ghcms_decode(*g, y); });
  }
  return std::nullopt;
}

// ---- params ----

struct ParamsArgs {
  std::optional<unsigned> a;
  std::optional<unsigned> scan;
  bool cuvw = false;
  bool kv = false;
};

int cmd_params(const ParamsArgs& args, std::ostream& out) {
  require(args.a.has_value() != args.scan.has_value(), Errc::precondition_violation,
          "params needs exactly one of --a and --scan");
  const unsigned first = args.a ? *args.a : 1;
  const unsigned last = args.a ? *args.a : *args.scan;
  require(first >= 1 && last >= first, Errc::precondition_violation, "a must be at least 1");
  if (!args.kv) {
    out << std::setw(3) << "a" << std::setw(8) << "n" << std::setw(8) << "M" << std::setw(6)
        << "M-n" << std::setw(8) << "3n-2M" << '\n';
  }
  for (unsigned a = first; a <= last; ++a) {
    const auto p = perfect_params_for_a(a);
    const auto n = static_cast<long long>(p.n);
    const auto M = static_cast<long long>(p.M);
    require(n < (1LL << 61), Errc::overflow, "3n - 2M overflows for a = " + std::to_string(a));
    if (args.kv) {
      out << "a=" << a << " n=" << n << " M=" << M << " M-n=" << M - n
          << " 3n-2M=" << 3 * n - 2 * M << '\n';
    } else {
      out << std::setw(3) << a << std::setw(8) << n << std::setw(8) << M << std::setw(6) << M - n
          << std::setw(8) << 3 * n - 2 * M << '\n';
    }
    if (!args.cuvw) continue;
    for (const auto& r : feasible_cuvw(n, M)) {
      if (args.kv) {
        out << "cuvw a=" << a << " c=" << r.c << " u=" << r.u << " v=" << r.v << " w=" << r.w
            << '\n';
      } else {
        out << "    (c,u,v,w) = (" << r.c << "," << r.u << "," << r.v << "," << r.w << ")\n";
      }
    }
  }
  return 0;
}

// ---- gen ----

struct GenArgs {
  std::optional<unsigned> a;
  std::vector<std::size_t> split;
  bool trivial = false;
  bool random_partition = false;
  std::size_t s = 0;
  std::size_t r = 0;
  std::size_t attempts = 1000;
  std::string out_path;
  bool kv = false;
};

// decode a few random members before anything is written
void self_test(const SwCode& code, const Decoder& decode, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 64; ++k) {
    const auto x = random_source(code.terminals(), code.length(), rng);
    require(decode(encode(code, x)) == x, Errc::internal, "round-trip self-test failed");
  }
}

int cmd_gen(const GenArgs& args, std::uint64_t seed, std::ostream& out) {
  const int modes = int(args.a.has_value()) + int(args.trivial) + int(args.random_partition);
  require(modes == 1, Errc::precondition_violation,
          "gen needs exactly one of --a, --trivial and --random-partition");
  std::optional<std::vector<std::size_t>> split;
  if (!args.split.empty()) split = args.split;

  std::optional<HcmsBundle> h;
  std::optional<GhcmsBundle> g;
  if (args.a) {
    h = hcms_for_a(*args.a, split);
  } else if (args.random_partition) {
    auto q = search_sum_zero_partition(args.s, args.r, seed, args.attempts);
    require(q.has_value(), Errc::budget_exceeded,
            "no sum-zero partition found within " + std::to_string(args.attempts) + " attempts");
    const std::vector<BitMatrix> upper(q->begin(), q->end() - 1);
    const auto stack = vstack(upper);
    require(stack.rows() <= stack.cols(), Errc::height_negative,
            "required height of T is negative for s = " + std::to_string(args.s) +
                ", r = " + std::to_string(args.r));
    require(rank(stack) == stack.rows(), Errc::r_not_invertible,
            "[Q_1; ...; Q_{s-1}] is rank deficient, no T completes it");
    auto t = standard_completion(stack);
    h = hcms_from_parts(std::move(*q), std::move(t), split);
  } else {
    g = ghcms_trivial();
  }

  const SwCode& code = h ? h->code : g->code;
  const auto report = check_compressible(code);
  require(report.perfect, Errc::internal, "constructed code failed the perfectness check");
  if (h) {
    self_test(code, [&](const SyndromeTuple& y) { return hcms_decode(*h, y); }, seed);
  } else {
    self_test(code, [&](const SyndromeTuple& y) { return ghcms_decode(*g, y); }, seed);
  }

  emit(args.out_path, out, [&](std::ostream& o) {
    if (h) {
      write_bundle(o, *h);
    } else {
      write_bundle(o, *g);
    }
  });
  if (!args.out_path.empty()) {
    Report rep(out, args.kv);
    rep.field("kind", h ? "hcms" : "ghcms");
    rep.field("s", code.terminals());
    rep.field("n", code.length());
    rep.field("M", code.total_rows());
    rep.field("m", join(code.row_counts(), args.kv ? "," : " "));
    rep.flag("perfect", true);
    rep.field("written", args.out_path);
  }
  return 0;
}

// ---- encode / decode ----

int cmd_encode(const std::string& bundle_path, const std::string& in_path,
               const std::string& out_path, std::ostream& out) {
  auto bf = open_in(bundle_path);
  const auto bundle = read_bundle(bf);
  auto in = open_in(in_path);
  const auto xs = read_sources(in);
  std::vector<SyndromeTuple> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(encode(bundle.code, x));
  emit(out_path, out, [&](std::ostream& o) { write_syndromes(o, ys); });
  return 0;
}

int cmd_decode(const std::string& bundle_path, const std::string& in_path,
               const std::string& out_path, bool force_table, std::ostream& out) {
  auto bf = open_in(bundle_path);
  const auto bundle = read_bundle(bf);
  auto in = open_in(in_path);
  const auto ys = read_syndromes(in);

  std::optional<TableDecoder> table;
  std::optional<Decoder> decode = force_table ? std::nullopt : algebraic_decoder(bundle);
  if (!decode) {
    table.emplace(bundle.code, budget_from_env(default_table_budget));
    decode = [&](const SyndromeTuple& y) { return table->decode(y); };
  }
  std::vector<SourceTuple> xs;
  xs.reserve(ys.size());
  for (const auto& y : ys) xs.push_back((*decode)(y));
  emit(out_path, out, [&](std::ostream& o) { write_sources(o, xs); });
  return 0;
}

// ---- verify ----

struct VerifyArgs {
  std::string bundle;
  bool require_perfect = false;
  std::size_t samples = 1000;
  bool kv = false;
};

int cmd_verify(const VerifyArgs& args, std::uint64_t seed, std::ostream& out) {
  auto bf = open_in(args.bundle);
  const auto raw = parse_bundle(bf);
  const auto& code = raw.code;
  Report rep(out, args.kv);

  std::string kind = "code";
  if (raw.find("C_1")) {
    kind = "ghcms";
  } else if (!raw.sections.empty()) {
    kind = "hcms";
  }
  std::optional<Bundle> bundle;
  std::string sections = "none";
  if (!raw.sections.empty()) {
    try {
      bundle = rebuild(raw);
      sections = "consistent";
    } catch (const Error& e) {
      sections = std::string("inconsistent (") + std::string(e.token()) + ": " + e.what() + ")";
    }
  }

  const auto analysis = check_compressible(code);
  std::vector<std::size_t> null_dims;
  for (std::size_t i = 0; i < code.terminals(); ++i) null_dims.push_back(code.length() - analysis.ranks[i]);
  const char* sep = args.kv ? "," : " ";
  rep.field("kind", kind);
  rep.field("s", code.terminals());
  rep.field("n", code.length());
  rep.field("M", code.total_rows());
  rep.field("m", join(code.row_counts(), sep));
  rep.field("ranks", join(analysis.ranks, sep));
  rep.field("null_dims", join(null_dims, sep));
  rep.field("stacked_rank", analysis.stacked_rank);
  rep.flag("perfect_params", is_perfect_params(code.terminals(), code.length(), code.total_rows()));
  rep.flag("compressible", analysis.compressible);
  rep.flag("perfect", analysis.perfect);
  rep.field("sections", sections);
  if (analysis.counterexample) {
    rep.field("counterexample_x", tuple_text(analysis.counterexample->x));
    rep.field("counterexample_x_prime", tuple_text(analysis.counterexample->x_prime));
  }

  bool round_trip = true;
  if (bundle && analysis.compressible && args.samples > 0) {
    if (auto decode = algebraic_decoder(*bundle)) {
      std::mt19937_64 rng(seed);
      std::size_t failures = 0;
      for (std::size_t k = 0; k < args.samples; ++k) {
        const auto x = random_source(code.terminals(), code.length(), rng);
        try {
          if ((*decode)(encode(code, x)) != x) ++failures;
        } catch (const Error&) {
          ++failures;
        }
      }
      rep.field("round_trip_samples", args.samples);
      rep.field("round_trip_failures", failures);
      round_trip = failures == 0;
    }
  }

  bool claims_perfect = kind == "hcms";
  if (bundle && bundle->ghcms) claims_perfect = bundle->ghcms->perfect;
  const bool consistent = raw.sections.empty() || sections == "consistent";
  const bool pass = analysis.compressible && consistent && round_trip && (!claims_perfect || analysis.perfect) &&
                    (!args.require_perfect || analysis.perfect);
  rep.field("status", pass ? "ok" : "fail");
  return pass ? 0 : 1;
}

// ---- search ----

struct SearchArgs {
  std::size_t s = 3;
  std::size_t n = 0;
  std::size_t M = 0;
  unsigned jobs = 1;
  std::uint64_t budget = 0;
  bool kv = false;
};

int cmd_search(const SearchArgs& args, std::ostream& out) {
  require(args.s == 3, Errc::precondition_violation, "search supports s = 3 only");
  SearchOptions options;
  options.jobs = args.jobs;
  options.budget = args.budget ? args.budget : budget_from_env(options.budget);
  const auto result = search_perfect_null_spaces(args.n, args.M, options);
  Report rep(out, args.kv);
  const auto& st = result.stats;
  for (std::size_t d = 0; d < st.admissible_by_dim.size(); ++d) {
    rep.field("admissible_d" + std::to_string(d), st.admissible_by_dim[d]);
  }
  for (const auto& a : st.assignments) {
    const std::string dims = std::to_string(a.d[0]) + "," + std::to_string(a.d[1]) + "," +
                             std::to_string(a.d[2]);
    if (rep.kv()) {
      out << "assignment=" << dims << " admissible=" << (a.admissible ? "true" : "false") << '\n';
    } else {
      out << "assignment (" << dims << "): " << (a.admissible ? "admissible" : "pruned") << '\n';
    }
  }
  rep.field("triples_tested", st.triples_tested);
  rep.field("triples_passed", st.triples_passed);
  if (result.profiles.empty()) {
    rep.field("result", "none exists");
    return 0;
  }
  rep.field("result", std::to_string(result.profiles.size()) + " profile(s)");
  for (std::size_t k = 0; k < result.profiles.size(); ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& sp = result.profiles[k].spaces[i];
      std::string basis;
      for (const auto& row : sp.basis().row_vectors()) basis += (basis.empty() ? "" : ",") + row.to_string();
      rep.field("profile" + std::to_string(k) + "_N" + std::to_string(i + 1),
                basis.empty() ? std::string("{0}") : basis);
    }
  }
  return 0;
}

// ---- reduce ----

int cmd_reduce(const std::string& bundle_path, const std::string& out_path, bool kv,
               std::ostream& out) {
  auto bf = open_in(bundle_path);
  const auto bundle = read_bundle(bf);
  const auto red = reduce_to_ghcms(bundle.code);
  emit(out_path, out, [&](std::ostream& o) { write_bundle(o, red.bundle); });
  if (out_path.empty()) return 0;
  Report rep(out, kv);
  const char* sep = kv ? "," : " ";
  rep.field("null_dims_before", join(red.before.dims(), sep));
  rep.field("null_dims_normalized", join(profile_of(red.normalization.code).dims(), sep));
  rep.field("null_dims_after", join(red.after.dims(), sep));
  rep.field("m_after", join(red.bundle.code.row_counts(), sep));
  rep.field("last_exclusive_intersection_dim", red.normalization.last_exclusive_dim);
  rep.flag("profiles_equal", red.after == profile_of(red.normalization.code));
  rep.flag("perfect", is_perfect(red.bundle.code));
  for (std::size_t k = 0; k < red.log.size(); ++k) rep.field("step" + std::to_string(k + 1), red.log[k]);
  rep.field("written", out_path);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slepian-Wolf syndrome codes for Hamming sources", "hcms"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for sampled checks and randomized constructions")
      ->capture_default_str();

  ParamsArgs pa;
  auto* params = app.add_subcommand("params", "perfect three-terminal parameters");
  params->add_option("--a", pa.a, "single value of a");
  params->add_option("--scan", pa.scan, "rows for a = 1..scan");
  params->add_flag("--cuvw", pa.cuvw, "list feasible (c,u,v,w)");
  params->add_flag("--kv", pa.kv, "key=value output");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "build and validate a code bundle");
  gen->add_option("--a", ga.a, "HCMS for n = (4^a-1)/3");
  gen->add_option("--split", ga.split, "rows of T given to each terminal")->delimiter(',');
  gen->add_flag("--trivial", ga.trivial, "the s = 3, n = 1 generalized construction");
  gen->add_flag("--random-partition", ga.random_partition,
                "randomized sum-zero partition search (needs --s and --r)");
  gen->add_option("--s", ga.s, "terminals for --random-partition");
  gen->add_option("--r", ga.r, "rows of P for --random-partition");
  gen->add_option("--attempts", ga.attempts, "attempts for --random-partition")->capture_default_str();
  gen->add_option("-o,--out", ga.out_path, "output file (default stdout)");
  gen->add_flag("--kv", ga.kv, "key=value summary");

  std::string enc_bundle, enc_in, enc_out;
  auto* enc = app.add_subcommand("encode", "syndromes of source tuples");
  enc->add_option("--bundle", enc_bundle)->required();
  enc->add_option("--in", enc_in, "source tuple file")->required();
  enc->add_option("-o,--out", enc_out, "syndrome file (default stdout)");

  std::string dec_bundle, dec_in, dec_out;
  bool dec_table = false;
  auto* dec = app.add_subcommand("decode", "source tuples from syndromes");
  dec->add_option("--bundle", dec_bundle)->required();
  dec->add_option("--in", dec_in, "syndrome file")->required();
  dec->add_option("-o,--out", dec_out, "source tuple file (default stdout)");
  dec->add_flag("--table", dec_table, "use the lookup-table decoder even for constructions");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "exact compressibility and perfectness report");
  ver->add_option("--bundle", va.bundle)->required();
  ver->add_flag("--require-perfect", va.require_perfect, "fail unless the code is perfect");
  ver->add_option("--samples", va.samples, "sampled decoder round trips")->capture_default_str();
  ver->add_flag("--kv", va.kv, "key=value output");

  SearchArgs sa;
  auto* sea = app.add_subcommand("search", "exhaustive search for perfect null-space triples");
  sea->add_option("--s", sa.s)->capture_default_str();
  sea->add_option("--n", sa.n)->required();
  sea->add_option("--M", sa.M)->required();
  sea->add_option("--jobs", sa.jobs, "worker threads")->capture_default_str();
  sea->add_option("--budget", sa.budget, "candidate budget (default HCMS_BUDGET or 2^24)");
  sea->add_flag("--kv", sa.kv, "key=value output");

  std::string red_bundle, red_out;
  bool red_kv = false;
  auto* red = app.add_subcommand("reduce", "rebuild a perfect code as a generalized HCMS");
  red->add_option("--bundle", red_bundle)->required();
  red->add_option("-o,--out", red_out, "GHCMS bundle file; the report goes to stdout");
  red->add_flag("--kv", red_kv, "key=value report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (params->parsed()) return cmd_params(pa, out);
    if (gen->parsed()) return cmd_gen(ga, seed, out);
    if (enc->parsed()) return cmd_encode(enc_bundle, enc_in, enc_out, out);
    if (dec->parsed()) return cmd_decode(dec_bundle, dec_in, dec_out, dec_table, out);
    if (ver->parsed()) return cmd_verify(va, seed, out);
    if (sea->parsed()) return cmd_search(sa, out);
    if (red->parsed()) return cmd_reduce(red_bundle, red_out, red_kv, out);
  } catch (const Error& e) {
    err << "error: " << e.token() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: INTERNAL: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace hcms::cli
