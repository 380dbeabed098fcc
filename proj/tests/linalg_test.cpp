#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "schrod/matrix.hpp"

using namespace schrod;

namespace {

Matrix random_matrix(Field f, size_t r, size_t c, std::mt19937& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(f, r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = Scalar(f, dist(rng));
  return m;
}

}  // namespace

TEST(Rational, NormalisesAndPrints) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational::parse(" -10/4 "), Rational(-5, 2));
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), Error);
}

TEST(Rational, PromotesPastMachineWordsAndDemotesBack) {
  Rational big(std::numeric_limits<int64_t>::max());
  Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  Rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  Rational sum = big + Rational(1);
  EXPECT_FALSE(sum.is_small());
  EXPECT_EQ(sum - Rational(1), big);
  EXPECT_EQ((sum - sum).str(), "0");
  EXPECT_EQ(Rational(std::numeric_limits<int64_t>::min()).str(), "-9223372036854775808");
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int64_t> dist(-1000000, 1000000);
  for (int t = 0; t < 200; ++t) {
    Rational a(dist(rng), dist(rng) | 1), b(dist(rng), dist(rng) | 1), c(dist(rng), 3);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, Rational());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Rational(1));
    }
  }
}

TEST(Scalar, PrimeFieldArithmetic) {
  Field f = Field::prime(7);
  Scalar a(f, 3), b(f, 5);
  EXPECT_EQ((a + b).str(), "1");
  EXPECT_EQ((a * b).str(), "1");
  EXPECT_EQ((a * a.inverse()).str(), "1");
  EXPECT_EQ(Scalar(f, -1).str(), "6");
  EXPECT_EQ(Scalar(f, Rational(1, 2)).str(), "4");
  EXPECT_THROW(Field::prime(9), Error);
}

TEST(Scalar, CyclotomicRootsOfUnity) {
  Field f = Field::cyclotomic(3);
  EXPECT_EQ(f.degree(), 2);
  Scalar z = Scalar::zeta(f);
  EXPECT_TRUE(z.pow(3).is_one());
  EXPECT_FALSE(z.is_one());
  EXPECT_TRUE((Scalar::one(f) + z + z * z).is_zero());
  EXPECT_EQ((z * z).str(), "[-1,-1]");
  EXPECT_EQ(z.inverse(), z * z);
  Scalar w = Scalar(f, 2) + Scalar(f, 3) * z;
  EXPECT_TRUE((w * w.inverse()).is_one());

  Field f8 = Field::cyclotomic(8);
  EXPECT_EQ(f8.degree(), 4);
  Scalar z8 = Scalar::zeta(f8);
  EXPECT_EQ(z8.pow(4), Scalar(f8, -1));
  Scalar v = Scalar::parse(f8, "[1,2,0,1/2]");
  EXPECT_TRUE((v * v.inverse()).is_one());
  EXPECT_EQ(Scalar::parse(f8, v.str()), v);
  EXPECT_EQ(Scalar::parse(Field::cyclotomic(3), "[0,0,1]"), z * z);
}

TEST(Scalar, FieldMismatchIsRejected) {
  Scalar a(Field::rationals(), 1);
  Scalar b(Field::cyclotomic(3), 1);
  EXPECT_THROW(a + b, Error);
  try {
    (void)(a * b);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
}

TEST(Matrix, InverseRoundTrip) {
  std::mt19937 rng(11);
  for (Field f : {Field::rationals(), Field::prime(5), Field::cyclotomic(4)}) {
    int found = 0;
    for (int t = 0; t < 20 && found < 5; ++t) {
      Matrix m = random_matrix(f, 5, 5, rng);
      if (!is_invertible(m)) continue;
      ++found;
      Matrix inv = invert(m);
      EXPECT_TRUE((m * inv).is_identity());
      EXPECT_TRUE((inv * m).is_identity());
    }
    EXPECT_GT(found, 0);
  }
}

TEST(Matrix, SingularInverseThrows) {
  Field f;
  Matrix m(f, 2, 2);
  m(0, 0) = Scalar(f, 1);
  m(0, 1) = Scalar(f, 2);
  m(1, 0) = Scalar(f, 2);
  m(1, 1) = Scalar(f, 4);
  try {
    invert(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularMatrix);
  }
}

TEST(Matrix, NullspaceIsExactKernel) {
  std::mt19937 rng(3);
  Field f;
  for (int t = 0; t < 10; ++t) {
    Matrix a = random_matrix(f, 3, 6, rng);
    auto ns = nullspace(a);
    EXPECT_EQ(ns.size() + rank(a), 6u);
    for (const auto& v : ns) EXPECT_TRUE(is_zero_vec(a * v));
  }
}

TEST(Matrix, LocalApplyMatchesKronecker) {
  std::mt19937 rng(5);
  Field f;
  size_t d = 2, n = 3;
  Matrix op = random_matrix(f, 4, 4, rng);
  Matrix id = Matrix::identity(f, d);
  Matrix full1 = kron(op, id);
  Matrix full2 = kron(id, op);
  for (size_t i = 0; i < 8; ++i) {
    Vec e = unit_vec(f, 8, i);
    EXPECT_EQ(local_apply(op, d, n, 1, e), full1 * e);
    EXPECT_EQ(local_apply(op, d, n, 2, e), full2 * e);
  }
}
