#include <gtest/gtest.h>

#include <random>

#include "hcms/codec.hpp"
#include "hcms/error.hpp"
#include "hcms/ghcms.hpp"
#include "hcms/hcms.hpp"
#include "hcms/linalg.hpp"
#include "hcms/random.hpp"

namespace hcms {
namespace {

template <class F>
void expect_error(Errc code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << token(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::vector<BitMatrix> base_q() {
  const auto& d = base_data();
  return {d.q1, d.q2, d.q3};
}

void expect_exhaustive_round_trip(const GhcmsBundle& b) {
  HammingSourceSet(b.s, b.n).for_each([&](std::uint64_t, const SourceTuple& x) {
    EXPECT_EQ(ghcms_decode(b, encode(b.code, x)), x);
  });
}

TEST(GhcmsTrivial, Structure) {
  const auto b = ghcms_trivial();
  EXPECT_EQ(b.s, 3u);
  EXPECT_EQ(b.n, 1u);
  EXPECT_EQ(b.r, 2u);
  EXPECT_EQ(b.M, 3u);
  EXPECT_EQ(b.P, BitMatrix::from_strings({"101", "011"}));
  const auto one = BitMatrix::from_strings({"1"});
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(b.C[i], one);
    EXPECT_EQ(b.code.matrix(i), one);
  }
  EXPECT_EQ(b.Y, one);
  EXPECT_EQ(b.T.rows(), 0u);
  EXPECT_EQ(b.row_dims(), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_TRUE(b.perfect);
  EXPECT_TRUE(is_perfect(b.code));
  expect_exhaustive_round_trip(b);
}

TEST(GhcmsBase, MatchesHcms) {
  const auto g = ghcms_build(base_q());
  const auto h = hcms_a3();
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(g.C[i].rows(), 6u);
    EXPECT_EQ(Subspace::row_space(g.C[i]), Subspace::row_space(g.Q[i]));
    EXPECT_EQ(g.E[i] * g.C[i], g.Q[i]);
    EXPECT_EQ(g.D[i] * g.Q[i], g.C[i]);
  }
  EXPECT_EQ(g.Y.rows(), 12u);
  EXPECT_EQ(g.E_Y * g.Y, vstack({g.Q[0], g.Q[1]}));
  EXPECT_EQ(g.D_Y * vstack({g.Q[0], g.Q[1]}), g.Y);
  EXPECT_EQ(g.T, h.T);
  EXPECT_TRUE(g.perfect);
  EXPECT_EQ(profile_of(g.code), profile_of(h.code));
  EXPECT_TRUE(is_perfect(g.code));

  std::mt19937_64 rng(1);
  for (int t = 0; t < 3000; ++t) {
    const auto x = random_source(3, 21, rng);
    EXPECT_EQ(ghcms_decode(g, encode(g.code, x)), x);
  }
}

TEST(GhcmsBase, CustomRowBases) {
  std::mt19937_64 rng(2);
  auto q = base_q();
  std::vector<BitMatrix> c;
  for (const auto& qi : q) {
    BitMatrix mix;
    do {
      mix = random_matrix(6, 6, rng);
    } while (rank(mix) != 6);
    c.push_back(mix * row_basis(qi));
  }
  GhcmsOptions opt;
  opt.c = c;
  const auto g = ghcms_build(q, opt);
  EXPECT_EQ(g.C, c);
  EXPECT_TRUE(is_perfect(g.code));
  for (int t = 0; t < 500; ++t) {
    const auto x = random_source(3, 21, rng);
    EXPECT_EQ(ghcms_decode(g, encode(g.code, x)), x);
  }

  auto bad = c;
  bad[1] = c[0];
  opt.c = bad;
  expect_error(Errc::decomposition_invalid, [&] { ghcms_build(q, opt); });

  GhcmsOptions singular;
  singular.t = vstack({q[0], q[1]}).row_block(0, 9);
  expect_error(Errc::r_not_invertible, [&] { ghcms_build(q, singular); });
}

TEST(GhcmsLifted, LargerCode) {
  const auto h = hcms_for_a(4);
  const auto g = ghcms_build(h.Q);
  EXPECT_TRUE(g.perfect);
  EXPECT_TRUE(is_perfect(g.code));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const auto x = random_source(3, 85, rng);
    EXPECT_EQ(ghcms_decode(g, encode(g.code, x)), x);
  }
}

// A rank-deficient partition still gives a compressible code, just not a
// perfect one.
TEST(GhcmsDeficient, CompressibleButNotPerfect) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto q = search_sum_zero_partition(3, 4, seed, 2000);
    ASSERT_TRUE(q.has_value());
    const auto g = ghcms_build(*q);
    EXPECT_EQ(g.n, 5u);
    EXPECT_TRUE(is_compressible(g.code));
    EXPECT_FALSE(g.perfect);
    EXPECT_FALSE(is_perfect(g.code));
    expect_exhaustive_round_trip(g);
  }
}

TEST(GhcmsOtherTerminalCounts, FiveSources) {
  const auto q = search_sum_zero_partition(5, 4, 7, 2000);
  ASSERT_TRUE(q.has_value());
  const auto g = ghcms_build(*q);
  EXPECT_TRUE(is_compressible(g.code));
  EXPECT_EQ(g.perfect, is_perfect(g.code));
  expect_exhaustive_round_trip(g);
}

TEST(GhcmsTwoSources, HammingPair) {
  const auto p = hamming_matrix(3);
  const auto g = ghcms_build({p, p});
  EXPECT_EQ(g.code.total_rows(), 10u);
  EXPECT_TRUE(g.perfect);
  EXPECT_TRUE(is_perfect(g.code));
  expect_exhaustive_round_trip(g);

  expect_error(Errc::not_hamming_partition,
               [&] { ghcms_build({p, p.permute_columns(std::vector<std::size_t>{1, 0, 2, 3, 4, 5, 6})}); });
  expect_error(Errc::not_hamming_partition,
               [] { ghcms_build({BitMatrix::from_strings({"11"}), BitMatrix::from_strings({"11"})}); });
}

TEST(GhcmsDecode, BadSyndromes) {
  const auto g = ghcms_trivial();
  const SyndromeTuple wrong{{BitVector(1), BitVector(1)}};
  expect_error(Errc::dimension_mismatch, [&] { ghcms_decode(g, wrong); });
  // the two-terminal code is perfect, so every syndrome tuple decodes
  const auto p = hamming_matrix(2);
  const auto two = ghcms_build({p, p});
  int rejected = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << two.M); ++v) {
    const auto y = BitVector::from_value(two.M, v);
    const SyndromeTuple st{{y.slice(0, two.code.rows(0)), y.slice(two.code.rows(0), two.code.rows(1))}};
    try {
      EXPECT_EQ(encode(two.code, ghcms_decode(two, st)), st);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::syndrome_not_decodable);
      ++rejected;
    }
  }
  EXPECT_EQ(rejected, 0);
}

}  // namespace
}  // namespace hcms
