#include <gtest/gtest.h>

#include <random>

#include "czs/error.h"
#include "czs/multi_poly.h"
#include "czs/ring_scalar.h"

namespace czs {
namespace {

RingScalar random_scalar(std::mt19937_64 &rng) {
  auto q = [&] { return mpq_class(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6)); };
  return RingScalar(q(), q(), q(), q());
}

TEST(RingScalar, SqrtTwoAndUnit) {
  EXPECT_EQ(RingScalar::sqrt2() * RingScalar::sqrt2(), RingScalar(2));
  EXPECT_EQ(RingScalar::inv_sqrt2() * RingScalar::sqrt2(), RingScalar(1));
  EXPECT_EQ(RingScalar::i() * RingScalar::i(), RingScalar(-1));
  EXPECT_EQ(RingScalar::inv_sqrt2_pow(3) * RingScalar::inv_sqrt2_pow(1), RingScalar(mpq_class(1, 4)));
}

TEST(RingScalar, RationalsAreCanonical) {
  EXPECT_EQ(RingScalar(mpq_class(2, 4)), RingScalar(mpq_class(1, 2)));
  EXPECT_EQ(RingScalar(mpq_class(3, 3)), RingScalar(1));
}

TEST(RingScalar, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 200; ++n) {
    const RingScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
}

TEST(RingScalar, SignOfRealElements) {
  EXPECT_EQ((RingScalar(1) - RingScalar::sqrt2()).sign(), -1);
  EXPECT_EQ((RingScalar(3) - RingScalar(2) * RingScalar::sqrt2()).sign(), 1);
  EXPECT_EQ(RingScalar(0).sign(), 0);
  EXPECT_THROW(RingScalar::i().sign(), DomainError);
}

TEST(RingScalar, DivisionByZeroThrows) { EXPECT_THROW(RingScalar(1) / RingScalar(0), DomainError); }

TEST(RingScalar, Formatting) {
  EXPECT_EQ(RingScalar(mpq_class(-3, 2)).to_string(), "-3/2");
  EXPECT_EQ(RingScalar::inv_sqrt2().to_string(), "1/2√2");
  EXPECT_EQ(RingScalar::i().to_string(), "i(1)");
}

TEST(RingScalar, ComplexValue) {
  const auto z = (RingScalar::sqrt2() + RingScalar::i()).to_complex();
  EXPECT_NEAR(z.real(), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(z.imag(), 1.0, 1e-12);
}

MultiPoly var(int arity, int pair, int comp) { return MultiPoly::variable(arity, {pair, comp}); }

TEST(MultiPoly, ProductAndCancellation) {
  const MultiPoly x = var(1, 0, 0), y = var(1, 0, 1);
  const MultiPoly p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.size(), 2u);
}

TEST(MultiPoly, DifferentiateAndEvaluate) {
  const MultiPoly x = var(2, 0, 0), z = var(2, 1, 0);
  const MultiPoly p = x * x * z * RingScalar(3);
  EXPECT_EQ(differentiate(p, {0, 0}), x * z * RingScalar(6));
  const std::vector<RingScalar> at{RingScalar(2), RingScalar(0), RingScalar(5), RingScalar(0)};
  EXPECT_EQ(p.evaluate(at), RingScalar(60));
  EXPECT_EQ(p.pair_degree(0), 2);
  EXPECT_EQ(p.pair_degree(1), 1);
}

TEST(MultiPoly, LeibnizRule) {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 20; ++n) {
    MultiPoly f(2), g(2);
    for (int t = 0; t < 4; ++t) {
      f += var(2, rng() % 2, rng() % 2) * var(2, rng() % 2, rng() % 2) * RingScalar(static_cast<long>(rng() % 7) - 3);
      g += var(2, rng() % 2, rng() % 2) * RingScalar(static_cast<long>(rng() % 7) - 3);
    }
    const VarId v{static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)};
    EXPECT_EQ(differentiate(f * g, v), differentiate(f, v) * g + f * differentiate(g, v));
  }
}

TEST(Transvectant, LinearForms) {
  const MultiPoly f = var(1, 0, 0) * RingScalar(2) + var(1, 0, 1) * RingScalar(3);
  const MultiPoly g = var(1, 0, 0) * RingScalar(5) + var(1, 0, 1) * RingScalar(7);
  const int one[] = {1};
  EXPECT_EQ(transvect(f, g, one), MultiPoly::constant(1, RingScalar(-1)));
  EXPECT_EQ(transvect(g, f, one), MultiPoly::constant(1, RingScalar(1)));
}

TEST(Transvectant, OddOrderIsAntisymmetric) {
  const MultiPoly x = var(2, 0, 0), y = var(2, 0, 1), z = var(2, 1, 0), t = var(2, 1, 1);
  const MultiPoly f = x * x * z + y * x * t * RingScalar(3);
  const MultiPoly g = x * y * t - y * y * z;
  const int ord[] = {1, 0};
  EXPECT_EQ(transvect(f, g, ord), -transvect(g, f, ord));
}

TEST(Transvectant, QuadraticDiscriminant) {
  // (q, q)^2 = 2 (q_xx q_yy - q_xy^2).
  const MultiPoly x = var(1, 0, 0), y = var(1, 0, 1);
  const MultiPoly q = x * x * RingScalar(2) + x * y * RingScalar(6) + y * y * RingScalar(5);
  const int two[] = {2};
  EXPECT_EQ(transvect(q, q, two), MultiPoly::constant(1, RingScalar(2 * (4 * 10 - 36))));
}

TEST(Transvectant, ArityMismatchThrows) {
  const int one[] = {1};
  EXPECT_THROW(transvect(var(1, 0, 0), var(2, 0, 0), one), DomainError);
}

}  // namespace
}  // namespace czs
