#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hcms/codec.hpp"
#include "hcms/error.hpp"
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

BitMatrix zero_identity(std::size_t rows, std::size_t cols) {
  BitMatrix t(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) t.set(i, cols - rows + i);
  return t;
}

std::vector<BitMatrix> base_q() {
  const auto& d = base_data();
  return {d.q1, d.q2, d.q3};
}

TEST(HammingMatrix, Shape) {
  EXPECT_EQ(hamming_matrix(2), BitMatrix::from_strings({"011", "101"}));
  EXPECT_EQ(hamming_matrix(1), BitMatrix::from_strings({"1"}));
  for (std::size_t m = 1; m <= 10; ++m) {
    const auto h = hamming_matrix(m);
    EXPECT_EQ(h.cols(), (std::size_t{1} << m) - 1);
    EXPECT_TRUE(is_hamming_matrix(h));
    for (std::size_t j = 0; j < h.cols(); ++j) EXPECT_EQ(h.column(j).value_msb_first(), j + 1);
  }
}

TEST(HammingMatrix, Recognition) {
  EXPECT_FALSE(is_hamming_matrix(BitMatrix::from_strings({"011", "001"})));
  EXPECT_FALSE(is_hamming_matrix(BitMatrix::from_strings({"0110", "1011"})));
  EXPECT_FALSE(is_hamming_matrix(BitMatrix::from_strings({"001", "101"})));
  EXPECT_TRUE(is_hamming_matrix(BitMatrix::from_strings({"110", "101"})));
  const auto& d = base_data();
  EXPECT_TRUE(is_hamming_matrix(hstack({d.q1, d.q2, d.q3})));
}

TEST(ColumnIndex, CanonicalAndHashed) {
  const auto h = hamming_matrix(5);
  const ColumnIndex canon(h);
  EXPECT_TRUE(canon.canonical());
  std::vector<std::size_t> order(h.cols());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::mt19937_64 rng(1);
  std::shuffle(order.begin(), order.end(), rng);
  const auto shuffled = h.permute_columns(order);
  const ColumnIndex hashed(shuffled);
  EXPECT_FALSE(hashed.canonical());
  for (std::size_t j = 0; j < h.cols(); ++j) {
    EXPECT_EQ(canon.find(h.column(j)), j);
    EXPECT_EQ(hashed.find(shuffled.column(j)), j);
  }
  EXPECT_FALSE(canon.find(BitVector(5)).has_value());
  EXPECT_FALSE(hashed.find(BitVector(5)).has_value());
}

TEST(BasePartition, AllPropertiesHold) {
  const auto c = check_base_partition();
  EXPECT_TRUE(c.hamming);
  EXPECT_TRUE(c.sum_zero);
  EXPECT_TRUE(c.pivots);
  EXPECT_TRUE(c.v_relation);
  EXPECT_TRUE(c.r_invertible);
  const auto& d = base_data();
  EXPECT_EQ(d.q1.rows(), 6u);
  EXPECT_EQ(d.q1.cols(), 21u);
  EXPECT_EQ(d.k.rows(), 6u);
  EXPECT_EQ(d.k.cols(), 6u);
}

TEST(BasePartition, Bundle) {
  const auto b = hcms_a3();
  EXPECT_EQ(b.n, 21u);
  EXPECT_EQ(b.M, 27u);
  EXPECT_EQ(b.split, (std::vector<std::size_t>{3, 3, 3}));
  EXPECT_EQ(b.code.row_counts(), (std::vector<std::size_t>{9, 9, 9}));
  EXPECT_EQ(b.T, zero_identity(9, 21));
  EXPECT_EQ(b.R * b.R_inv, BitMatrix::identity(21));
  EXPECT_TRUE(is_perfect(b.code));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(b.code.matrix(i), vstack({b.G[i], b.Q[i]}));
  }
}

TEST(BasePartition, Splits) {
  const auto b = hcms_a3(std::vector<std::size_t>{9, 0, 0});
  EXPECT_EQ(b.code.row_counts(), (std::vector<std::size_t>{15, 6, 6}));
  EXPECT_TRUE(is_perfect(b.code));
  EXPECT_TRUE(is_perfect(hcms_a3(std::vector<std::size_t>{1, 7, 1}).code));
  expect_error(Errc::precondition_violation, [] { hcms_a3(std::vector<std::size_t>{3, 3}); });
  expect_error(Errc::precondition_violation, [] { hcms_a3(std::vector<std::size_t>{3, 3, 4}); });
}

TEST(DefaultSplit, Values) {
  EXPECT_EQ(default_split(9, 3), (std::vector<std::size_t>{3, 3, 3}));
  EXPECT_EQ(default_split(10, 3), (std::vector<std::size_t>{4, 3, 3}));
  EXPECT_EQ(default_split(0, 3), (std::vector<std::size_t>{0, 0, 0}));
}

TEST(HcmsFromParts, ErrorOrder) {
  // the trivial Hamming partition: T would need height 1 - 2 * 2 < 0
  const auto p = BitMatrix::from_strings({"101", "011"});
  std::vector<BitMatrix> q{p.col_block(0, 1), p.col_block(1, 1), p.col_block(2, 1)};
  expect_error(Errc::height_negative, [&] { hcms_from_parts(q, BitMatrix(0, 1)); });

  auto broken = q;
  broken[0].flip(0, 0);
  expect_error(Errc::not_hamming_partition, [&] { hcms_from_parts(broken, BitMatrix(0, 1)); });

  auto bq = base_q();
  bq[0].flip(2, 5);
  expect_error(Errc::not_hamming_partition, [&] { hcms_from_parts(bq, zero_identity(9, 21)); });

  expect_error(Errc::dimension_mismatch,
               [&] { hcms_from_parts(base_q(), zero_identity(8, 21)); });

  // T repeating rows of Q_1 makes R singular
  const auto t = vstack({base_q()[0], base_q()[0]}).row_block(0, 9);
  expect_error(Errc::r_not_invertible, [&] { hcms_from_parts(base_q(), t); });

  expect_error(Errc::precondition_violation,
               [&] { hcms_from_parts({hamming_matrix(2), hamming_matrix(2)}, BitMatrix(0, 3)); });
}

TEST(Lift, FromBase) {
  const auto& d = base_data();
  const TriplePartition base{3, d.q1, d.q2, d.q3};
  EXPECT_TRUE(satisfies_lift_invariant(base));
  const auto lifted = lift_partition(base);
  EXPECT_EQ(lifted.k, 4u);
  EXPECT_EQ(lifted.a.rows(), 8u);
  EXPECT_EQ(lifted.a.cols(), 85u);
  EXPECT_TRUE(is_hamming_matrix(hstack({lifted.a, lifted.b, lifted.c})));
  EXPECT_TRUE((lifted.a + lifted.b + lifted.c).is_zero());
  EXPECT_EQ(rank(vstack({lifted.a, lifted.b}).col_block(0, 16)), 16u);
  EXPECT_TRUE(satisfies_lift_invariant(lifted));
  // the top rows of each lifted block reproduce the original columns
  for (std::size_t j = 0; j < 12; ++j) {
    EXPECT_EQ(lifted.a.column(j).slice(0, 6), d.q1.column(j));
    EXPECT_FALSE(lifted.a.get(6, j) || lifted.a.get(7, j));
  }

  auto bad = base;
  bad.b = bad.a;
  expect_error(Errc::precondition_violation, [&] { lift_partition(bad); });
}

// Tagging every original column with the same tag sequences loses the
// pivot property: the 16 leading columns of the stack only reach rank 14.
TEST(Lift, UniformTaggingIsRankDeficient) {
  const auto& d = base_data();
  const BitMatrix* src[] = {&d.q1, &d.q2};
  constexpr int seq[2][4] = {{0, 1, 2, 3}, {0, 2, 3, 1}};
  const std::pair<std::size_t, int> extra[] = {{0, 2}, {1, 3}, {2, 3}, {3, 1}};
  auto stacked_column = [&](std::size_t j, int copy, bool exchange) {
    BitVector col(16);
    for (int block = 0; block < 2; ++block) {
      for (std::size_t i = 0; i < 6; ++i) col.set(8 * block + i, src[block]->get(i, j));
      int t = seq[block][copy];
      if (exchange && block == 1 && (j == 2 || j == 3)) {
        constexpr int c_seq[4] = {0, 3, 1, 2};
        t = c_seq[copy];
      }
      col.set(8 * block + 6, t & 1);
      col.set(8 * block + 7, (t >> 1) & 1);
    }
    return col;
  };
  for (const bool exchange : {false, true}) {
    std::vector<BitVector> cols;
    for (std::size_t j = 0; j < 12; ++j) cols.push_back(stacked_column(j, 0, exchange));
    for (const auto& [j, copy] : extra) cols.push_back(stacked_column(j, copy, exchange));
    EXPECT_EQ(rank(BitMatrix::from_columns(16, cols)), exchange ? 16u : 14u);
  }
}

TEST(HcmsForA, Examples) {
  for (unsigned a = 3; a <= 5; ++a) {
    const auto b = hcms_for_a(a);
    const auto p = perfect_params_for_a(a);
    EXPECT_EQ(b.n, p.n);
    EXPECT_EQ(b.M, p.M);
    EXPECT_EQ(b.code.total_rows(), p.M);
    EXPECT_EQ(b.T.rows(), p.n - 4 * a);
    EXPECT_TRUE(is_perfect(b.code)) << a;
  }
  EXPECT_EQ(hcms_for_a(3).code, hcms_a3().code);
  expect_error(Errc::height_negative, [] { hcms_for_a(1); });
  expect_error(Errc::height_negative, [] { hcms_for_a(2); });
  expect_error(Errc::budget_exceeded, [] { hcms_for_a(6, std::nullopt, 5); });
}

TEST(HcmsDecode, TrivialParams) {
  // hcms_decode needs a bundle; the smallest is a = 3, checked exhaustively
  // over every flip pattern for a few bases
  const auto b = hcms_a3();
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto base = random_vector(21, rng);
    const auto x0 = compose(3, base, std::nullopt);
    EXPECT_EQ(hcms_decode(b, encode(b.code, x0)), x0);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t p = 0; p < 21; ++p) {
        const auto x = compose(3, base, Flip{i, p});
        EXPECT_EQ(hcms_decode(b, encode(b.code, x)), x);
      }
    }
  }
  const SyndromeTuple zero{{BitVector(9), BitVector(9), BitVector(9)}};
  const auto x = hcms_decode(b, zero);
  EXPECT_TRUE(BitVector::concat(x.blocks).is_zero());
}

TEST(HcmsDecode, LargerCodesAndSplits) {
  std::mt19937_64 rng(3);
  for (const auto& b : {hcms_for_a(4), hcms_a3(std::vector<std::size_t>{9, 0, 0}),
                        hcms_for_a(4, std::vector<std::size_t>{0, 0, 69})}) {
    for (int trial = 0; trial < 2000; ++trial) {
      const auto x = random_source(3, b.n, rng);
      EXPECT_EQ(hcms_decode(b, encode(b.code, x)), x);
    }
  }
}

TEST(HcmsDecode, EverySyndromeDecodes) {
  const auto b = hcms_a3();
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    SyndromeTuple y;
    for (std::size_t i = 0; i < 3; ++i) y.parts.push_back(random_vector(9, rng));
    const auto x = hcms_decode(b, y);
    EXPECT_TRUE(is_hamming_source(x));
    EXPECT_EQ(encode(b.code, x), y);
  }
  const SyndromeTuple short_y{{BitVector(9), BitVector(9)}};
  expect_error(Errc::dimension_mismatch, [&] { hcms_decode(b, short_y); });
}

TEST(SumZeroPartition, RandomSearch) {
  for (const auto& [s, r] : {std::pair{3, 6}, {5, 4}, {3, 4}, {7, 3}}) {
    const auto q = search_sum_zero_partition(s, r, 1, 2000);
    ASSERT_TRUE(q.has_value()) << s << "," << r;
    EXPECT_NO_THROW(validate_hamming_partition(*q));
    EXPECT_EQ(q->size(), std::size_t(s));
  }
  EXPECT_FALSE(search_sum_zero_partition(3, 5, 1, 100).has_value());
  EXPECT_EQ(search_sum_zero_partition(3, 6, 9, 2000), search_sum_zero_partition(3, 6, 9, 2000));
}

// A sum-zero partition with a tall enough completion is an HCMS.
TEST(SumZeroPartition, FeedsConstruction) {
  int built = 0;
  for (std::uint64_t seed = 0; seed < 20 && built < 3; ++seed) {
    const auto q = search_sum_zero_partition(3, 6, seed, 2000);
    ASSERT_TRUE(q.has_value());
    const auto top = vstack({(*q)[0], (*q)[1]});
    if (rank(top) < 12) {
      expect_error(Errc::precondition_violation, [&] { standard_completion(top); });
      continue;
    }
    const auto b = hcms_from_parts(*q, standard_completion(top));
    EXPECT_TRUE(is_perfect(b.code));
    ++built;
  }
  EXPECT_EQ(built, 3);
}

TEST(StandardCompletion, MakesInvertible) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = 1 + rng() % 40;
    const auto y = row_basis(random_matrix(rng() % (n + 1), n, rng));
    const auto t = standard_completion(y);
    EXPECT_EQ(t.rows(), n - y.rows());
    EXPECT_EQ(rank(vstack({y, t})), n);
  }
  expect_error(Errc::precondition_violation,
               [] { standard_completion(BitMatrix::from_strings({"11", "11"})); });
}

}  // namespace
}  // namespace hcms
