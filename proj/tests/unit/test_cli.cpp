#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "hcms/codec.hpp"
#include "hcms/hcms.hpp"
#include "hcms/io.hpp"
#include "hcms/random.hpp"

namespace hcms {
namespace {

namespace fs = std::filesystem;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path tmp_dir() {
  const char* env = std::getenv("HCMS_TEST_TMP");
  fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "hcms_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string tmp(const std::string& name) { return (tmp_dir() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

TEST(CliParams, Scan) {
  const auto r = run({"params", "--scan", "5"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  std::vector<std::vector<long long>> rows;
  for (std::string line; std::getline(lines, line);) {
    std::istringstream ls(line);
    std::vector<long long> row;
    for (long long v; ls >> v;) row.push_back(v);
    rows.push_back(row);
  }
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<long long>{1, 1, 3, 2, -3}));
  EXPECT_EQ(rows[2], (std::vector<long long>{3, 21, 27, 6, 9}));
  EXPECT_EQ(rows[4], (std::vector<long long>{5, 341, 351, 10, 321}));
}

TEST(CliParams, Cuvw) {
  const auto r = run({"params", "--a", "3", "--cuvw", "--kv"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "a=3 n=21 M=27 M-n=6 3n-2M=9"));
  EXPECT_TRUE(contains(r.out, "cuvw a=3 c=9 u=6 v=6 w=6"));
  EXPECT_TRUE(contains(r.out, "cuvw a=3 c=12 u=4 v=4 w=4"));
  const auto one = run({"params", "--a", "1", "--cuvw"});
  EXPECT_EQ(one.status, 0);
  EXPECT_TRUE(contains(one.out, "(c,u,v,w) = (0,0,0,0)"));
  EXPECT_NE(run({"params"}).status, 0);
  EXPECT_NE(run({"params", "--a", "2", "--scan", "3"}).status, 0);
}

TEST(CliGen, PerfectBundlesVerify) {
  for (const auto& [name, args] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"a3.txt", {"--a", "3"}},
           {"a4.txt", {"--a", "4"}},
           {"a3_split.txt", {"--a", "3", "--split", "0,9,0"}},
           {"trivial.txt", {"--trivial"}}}) {
    std::vector<std::string> gen{"gen"};
    gen.insert(gen.end(), args.begin(), args.end());
    gen.insert(gen.end(), {"-o", tmp(name), "--kv"});
    const auto g = run(gen);
    ASSERT_EQ(g.status, 0) << name << ": " << g.err;
    EXPECT_TRUE(contains(g.out, "perfect=true"));

    const auto v = run({"verify", "--bundle", tmp(name), "--kv"});
    EXPECT_EQ(v.status, 0) << name << "\n" << v.out;
    EXPECT_TRUE(contains(v.out, "perfect=true"));
    EXPECT_TRUE(contains(v.out, "sections=consistent"));
    EXPECT_TRUE(contains(v.out, "round_trip_failures=0"));
    EXPECT_TRUE(contains(v.out, "status=ok"));
  }
  const auto v = run({"verify", "--bundle", tmp("a3_split.txt"), "--kv"});
  EXPECT_TRUE(contains(v.out, "m=6,15,6"));
}

TEST(CliGen, HeightNegative) {
  for (const char* a : {"1", "2"}) {
    const auto r = run({"gen", "--a", a});
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(contains(r.err, "error: HEIGHT_NEGATIVE")) << r.err;
  }
}

TEST(CliGen, Deterministic) {
  const auto a = run({"gen", "--a", "3"});
  const auto b = run({"gen", "--a", "3"});
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto r1 = run({"--seed", "5", "gen", "--random-partition", "--s", "3", "--r", "6"});
  const auto r2 = run({"--seed", "5", "gen", "--random-partition", "--s", "3", "--r", "6"});
  ASSERT_EQ(r1.status, 0) << r1.err;
  EXPECT_EQ(r1.out, r2.out);
}

TEST(CliCodec, FileRoundTrip) {
  std::mt19937_64 rng(1);
  for (const auto& [label, gen] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"1", {"--trivial"}}, {"21", {"--a", "3"}}, {"85", {"--a", "4"}}}) {
    const auto bundle = tmp("rt_bundle_" + label + ".txt");
    std::vector<std::string> args{"gen", "-o", bundle};
    args.insert(args.end(), gen.begin(), gen.end());
    ASSERT_EQ(run(args).status, 0);

    const auto n = std::stoul(label);
    std::vector<SourceTuple> xs;
    for (int k = 0; k < 50; ++k) xs.push_back(random_source(3, n, rng));
    const auto src = tmp("rt_src_" + label + ".txt");
    {
      std::ofstream f(src);
      write_sources(f, xs);
    }
    const auto syn = tmp("rt_syn_" + label + ".txt");
    const auto back = tmp("rt_back_" + label + ".txt");
    ASSERT_EQ(run({"encode", "--bundle", bundle, "--in", src, "-o", syn}).status, 0);
    ASSERT_EQ(run({"decode", "--bundle", bundle, "--in", syn, "-o", back}).status, 0);
    EXPECT_EQ(slurp(back), slurp(src)) << label;

    std::ifstream bf(bundle);
    const auto b = read_bundle(bf);
    std::ifstream sf(syn);
    const auto ys = read_syndromes(sf);
    ASSERT_EQ(ys.size(), xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) EXPECT_EQ(ys[k], encode(b.code, xs[k]));
  }
}

TEST(CliCodec, TableDecoderOnPlainCode) {
  const auto h = hamming_matrix(3);
  const SwCode code({BitMatrix::identity(7), h});
  const auto bundle = tmp("plain.txt");
  {
    std::ofstream f(bundle);
    write_code(f, code);
  }
  std::mt19937_64 rng(2);
  std::vector<SourceTuple> xs;
  for (int k = 0; k < 30; ++k) xs.push_back(random_source(2, 7, rng));
  std::vector<SyndromeTuple> ys;
  for (const auto& x : xs) ys.push_back(encode(code, x));
  const auto syn = tmp("plain_syn.txt");
  {
    std::ofstream f(syn);
    write_syndromes(f, ys);
  }
  const auto r = run({"decode", "--bundle", bundle, "--in", syn});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream in(r.out);
  EXPECT_EQ(read_sources(in), xs);

  const auto v = run({"verify", "--bundle", bundle, "--kv", "--require-perfect"});
  EXPECT_EQ(v.status, 0) << v.out;
  EXPECT_TRUE(contains(v.out, "kind=code"));
  EXPECT_TRUE(contains(v.out, "sections=none"));
}

TEST(CliCodec, ForcedTableMatchesAlgebraic) {
  const auto bundle = tmp("table_trivial.txt");
  ASSERT_EQ(run({"gen", "--trivial", "-o", bundle}).status, 0);
  const auto src = tmp("table_src.txt");
  {
    std::ofstream f(src);
    std::vector<SourceTuple> xs;
    HammingSourceSet(3, 1).for_each([&](std::uint64_t, const SourceTuple& x) { xs.push_back(x); });
    write_sources(f, xs);
  }
  const auto syn = tmp("table_syn.txt");
  ASSERT_EQ(run({"encode", "--bundle", bundle, "--in", src, "-o", syn}).status, 0);
  const auto alg = run({"decode", "--bundle", bundle, "--in", syn});
  const auto tab = run({"decode", "--bundle", bundle, "--in", syn, "--table"});
  ASSERT_EQ(tab.status, 0) << tab.err;
  EXPECT_EQ(alg.out, tab.out);
  EXPECT_EQ(tab.out, slurp(src));
}

// Duplicating a row of H_1 drops its rank, so the code cannot stay
// compressible and verify must report it.
TEST(CliVerify, SabotagedBundle) {
  const auto h = hcms_a3();
  auto hs = h.code.matrices();
  hs[0].set_row(0, hs[0].row(1));
  const SwCode broken(hs);

  const auto plain = tmp("sabotaged_plain.txt");
  {
    std::ofstream f(plain);
    write_code(f, broken);
  }
  const auto v = run({"verify", "--bundle", plain, "--kv"});
  EXPECT_NE(v.status, 0);
  EXPECT_TRUE(contains(v.out, "compressible=false"));
  EXPECT_TRUE(contains(v.out, "perfect=false"));
  EXPECT_TRUE(contains(v.out, "counterexample_x="));
  EXPECT_TRUE(contains(v.out, "status=fail"));

  // same damage inside a full construction bundle
  const auto good = run({"gen", "--a", "3"});
  const auto full = tmp("sabotaged_full.txt");
  {
    std::ofstream f(full);
    // the code section comes first; keep the remaining sections as written
    const auto text = good.out;
    std::ostringstream head;
    write_code(head, h.code);
    ASSERT_EQ(text.rfind(head.str(), 0), 0u);
    write_code(f, broken);
    f << text.substr(head.str().size());
  }
  const auto w = run({"verify", "--bundle", full, "--kv"});
  EXPECT_NE(w.status, 0);
  EXPECT_TRUE(contains(w.out, "kind=hcms"));
  EXPECT_TRUE(contains(w.out, "perfect=false"));
  EXPECT_TRUE(contains(w.out, "sections=inconsistent"));
  EXPECT_TRUE(contains(w.out, "status=fail"));
}

TEST(CliVerify, CompressibleButNotPerfect) {
  const auto h = hamming_matrix(3);
  auto padded = h;
  padded.append_row(h.row(0) + h.row(1));
  const auto path = tmp("padded.txt");
  {
    std::ofstream f(path);
    write_code(f, SwCode({BitMatrix::identity(7), padded}));
  }
  const auto v = run({"verify", "--bundle", path, "--kv"});
  EXPECT_EQ(v.status, 0);
  EXPECT_TRUE(contains(v.out, "compressible=true"));
  EXPECT_TRUE(contains(v.out, "perfect=false"));
  EXPECT_NE(run({"verify", "--bundle", path, "--require-perfect"}).status, 0);
}

TEST(CliSearch, Outcomes) {
  const auto none = run({"search", "--s", "3", "--n", "5", "--M", "9", "--kv"});
  ASSERT_EQ(none.status, 0) << none.err;
  EXPECT_TRUE(contains(none.out, "result=none exists"));
  EXPECT_TRUE(contains(none.out, "assignment=2,2,2 admissible=true"));
  EXPECT_TRUE(contains(none.out, "triples_tested=3375"));

  const auto one = run({"search", "--n", "1", "--M", "3", "--kv"});
  ASSERT_EQ(one.status, 0) << one.err;
  EXPECT_TRUE(contains(one.out, "result=1 profile(s)"));

  const auto bad = run({"search", "--n", "4", "--M", "8"});
  EXPECT_EQ(bad.status, 2);
  EXPECT_TRUE(contains(bad.err, "error: PARAMS_NOT_PERFECT"));
}

TEST(CliReduce, TrivialAndBase) {
  for (const auto& [name, gen] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"trivial", {"--trivial"}}, {"a3", {"--a", "3", "--split", "0,0,9"}}}) {
    const auto in = tmp("reduce_in_" + name + ".txt");
    const auto out = tmp("reduce_out_" + name + ".txt");
    std::vector<std::string> args{"gen", "-o", in};
    args.insert(args.end(), gen.begin(), gen.end());
    ASSERT_EQ(run(args).status, 0);
    const auto r = run({"reduce", "--bundle", in, "-o", out, "--kv"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "profiles_equal=true"));
    EXPECT_TRUE(contains(r.out, "perfect=true"));
    const auto v = run({"verify", "--bundle", out, "--kv"});
    EXPECT_EQ(v.status, 0) << v.out;
    EXPECT_TRUE(contains(v.out, "kind=ghcms"));
    EXPECT_TRUE(contains(v.out, "status=ok"));
  }
}

TEST(CliErrors, UsageAndFiles) {
  EXPECT_NE(run({"frobnicate"}).status, 0);
  EXPECT_NE(run({}).status, 0);
  const auto missing = run({"verify", "--bundle", tmp("does_not_exist.txt")});
  EXPECT_EQ(missing.status, 2);
  EXPECT_TRUE(contains(missing.err, "error: MALFORMED_INPUT"));
}

}  // namespace
}  // namespace hcms
