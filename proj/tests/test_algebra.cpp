#include <gtest/gtest.h>

#include <random>

#include "isospec/algebra.hpp"

using namespace isospec;

namespace {

SignedPerm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> t(n);
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  std::shuffle(t.begin(), t.end(), rng);
  for (auto& x : s) x = rng() % 2 ? 1 : -1;
  return SignedPerm::from_images(t, s);
}

RatMatrix dense(const SignedPerm& p) { return RatMatrix::from_signed_perm(p); }

}  // namespace

TEST(SignedPerm, FromImagesRejectsNonPermutation) {
  std::vector<std::size_t> t{0, 0};
  std::vector<int> s{1, 1};
  EXPECT_THROW(SignedPerm::from_images(t, s), std::invalid_argument);
  std::vector<std::size_t> t2{0, 1};
  std::vector<int> s2{1, 2};
  EXPECT_THROW(SignedPerm::from_images(t2, s2), std::invalid_argument);
}

TEST(SignedPerm, EntryMatchesRowConvention) {
  std::vector<std::size_t> t{1, 0, 2};
  std::vector<int> s{1, -1, -1};
  SignedPerm p = SignedPerm::from_images(t, s);
  EXPECT_EQ(p.entry(0, 1), 1);
  EXPECT_EQ(p.entry(1, 0), -1);
  EXPECT_EQ(p.entry(2, 2), -1);
  EXPECT_EQ(p.entry(0, 0), 0);
  EXPECT_EQ(trace(p), -1);
  EXPECT_FALSE(p.is_symmetric());
  EXPECT_TRUE(p.valid());
}

TEST(SignedPerm, ComposeMatchesDenseProduct) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    std::size_t n = 1 + rng() % 6;
    SignedPerm p = random_perm(n, rng), q = random_perm(n, rng);
    EXPECT_EQ(dense(compose(p, q)), dense(p) * dense(q));
    EXPECT_EQ(dense(p) * dense(inverse(p)), RatMatrix::identity(n));
    Rational tr = 0;
    RatMatrix d = dense(p);
    for (std::size_t i = 0; i < n; ++i) tr += d(i, i);
    EXPECT_EQ(Rational(trace(p)), tr);
  }
}

TEST(SignedPerm, SignedPermTimesMatrix) {
  std::mt19937_64 rng(8);
  SignedPerm p = random_perm(4, rng);
  RatMatrix m = RatMatrix::from_int_rows({{1, 2, 0, 3}, {0, -1, 4, 0}, {5, 0, 0, 1}, {2, 2, 2, 2}});
  EXPECT_EQ(p * m, dense(p) * m);
  EXPECT_EQ(m * p, m * dense(p));
}

TEST(SignedPerm, KroneckerMatchesDense) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    SignedPerm p = random_perm(1 + rng() % 3, rng), q = random_perm(1 + rng() % 4, rng);
    EXPECT_EQ(dense(kronecker(p, q)), kronecker(dense(p), dense(q)));
  }
}

TEST(SignedPerm, ShuffleCommutesKroneckerFactors) {
  std::mt19937_64 rng(10);
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 4; ++n) {
      SignedPerm a = random_perm(m, rng), b = random_perm(n, rng);
      SignedPerm p = shuffle_perm(m, n);
      EXPECT_EQ(compose(compose(p, kronecker(b, a)), inverse(p)), kronecker(a, b));
    }
}

TEST(SignedPerm, ConjugateByDiagonal) {
  std::vector<std::size_t> t{1, 0, 2};
  std::vector<int> s{1, 1, -1};
  SignedPerm p = SignedPerm::from_images(t, s);
  std::vector<int> d{1, -1, 1};
  SignedPerm q = conjugate_by_diagonal(p, d);
  RatMatrix dm = RatMatrix::from_int_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
  EXPECT_EQ(dense(q), dm * dense(p) * dm);
}

TEST(SignedPerm, CycleStringRoundTrip) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    std::size_t n = 1 + rng() % 7;
    SignedPerm p = random_perm(n, rng);
    EXPECT_EQ(parse_signed_cycles(to_cycle_string(p), n), p);
  }
  EXPECT_EQ(parse_signed_cycles("(1,2)", 3).entry(2, 2), 1);
  EXPECT_THROW(parse_signed_cycles("(1,1)", 2), std::invalid_argument);
  EXPECT_THROW(parse_signed_cycles("(1,4)", 3), std::invalid_argument);
  EXPECT_THROW(parse_signed_cycles("(1,2", 3), std::invalid_argument);
}

TEST(SignedPerm, InvolutionAndIdentity) {
  EXPECT_TRUE(SignedPerm::identity(4).is_identity());
  SignedPerm p = parse_signed_cycles("(1,2)(-3)", 3);
  EXPECT_TRUE(p.is_involution());
  EXPECT_TRUE(p.is_symmetric());
  EXPECT_TRUE(compose(p, p).is_identity());
}

TEST(RatMatrix, RankAndDeterminant) {
  RatMatrix a = RatMatrix::from_int_rows({{2, 1}, {4, 2}});
  EXPECT_EQ(a.rank(), 1u);
  EXPECT_FALSE(a.invertible());
  EXPECT_EQ(a.determinant(), 0);
  RatMatrix b = RatMatrix::from_int_rows({{1, 2, 3}, {0, 1, 4}, {5, 6, 0}});
  EXPECT_EQ(b.determinant(), 1);
  EXPECT_TRUE(b.invertible());
  RatMatrix t = RatMatrix::from_int_rows({{-1, 1}, {1, 1}});
  EXPECT_EQ(t * t, Rational(2) * RatMatrix::identity(2));
  EXPECT_EQ(t.determinant(), -2);
  EXPECT_EQ(b.transpose().transpose(), b);
  EXPECT_TRUE(RatMatrix::zero(2, 3).is_zero());
}

TEST(RatMatrix, ExactRationalArithmetic) {
  RatMatrix h = RatMatrix::from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 3), Rational(1, 4)}});
  EXPECT_EQ(h.determinant(), Rational(1, 72));
  EXPECT_EQ(h + h, Rational(2) * h);
}
