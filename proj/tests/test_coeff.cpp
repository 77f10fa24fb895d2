#include <doctest.h>

#include <random>

#include "kq/coeff.hpp"

using namespace kq;

namespace {

// Independent oracle: binom(n,k) = n(n-1)...(n-k+1) / k!, evaluated as an
// exact integer ratio.
Int binom_oracle(long long n, long long k) {
  Int num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= Int(n - i);
    den *= Int(i + 1);
  }
  return num / den;
}

BetaPoly poly(std::initializer_list<int> coeffs) {
  std::vector<Int> v;
  for (int c : coeffs) v.emplace_back(c);
  return BetaPoly(std::move(v));
}

BetaScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 2), coeff(-4, 4);
  auto rand_poly = [&](bool nonzero) {
    for (;;) {
      std::vector<Int> v;
      int d = deg(rng);
      for (int i = 0; i <= d; ++i) v.emplace_back(coeff(rng));
      BetaPoly p(std::move(v));
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return BetaScalar(rand_poly(false), rand_poly(true));
}

}  // namespace

TEST_SUITE("coeff") {

TEST_CASE("generalized binomial matches the falling-factorial oracle") {
  CHECK(binom_signed(-1, 2) == Int(1));
  CHECK(binom_signed(-3, 1) == Int(-3));
  CHECK(binom_signed(5, 0) == Int(1));
  for (long long n = -8; n <= 8; ++n)
    for (long long k = 0; k <= 8; ++k) CHECK(binom_signed(n, k) == binom_oracle(n, k));
}

TEST_CASE("fraction normalization") {
  // (b^2-1)/(b-1) = b+1
  CHECK(BetaScalar(poly({-1, 0, 1}), poly({-1, 1})) == BetaScalar(poly({1, 1})));
  CHECK(BetaScalar::rational(1, 2) * BetaScalar(2) == BetaScalar(1));
  BetaScalar half_beta(poly({0, 1}), poly({2}));
  CHECK(half_beta + half_beta == BetaScalar::beta_pow(1));
  // sign normalization: denominator leading coefficient positive
  BetaScalar v(poly({1}), poly({0, -2}));
  CHECK(v.den().leading_coeff() > 0);
  CHECK(v.num() == poly({-1}));
}

TEST_CASE("normalization is idempotent and equality is structural") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    BetaScalar a = random_scalar(rng);
    CHECK(BetaScalar(a.num(), a.den()) == a);
    BetaScalar b = random_scalar(rng);
    // equal values have identical representations
    BetaScalar lhs = (a + b) * (a - b);
    BetaScalar rhs = a * a - b * b;
    CHECK(lhs == rhs);
    CHECK(lhs.num() == rhs.num());
    CHECK(lhs.den() == rhs.den());
  }
}

TEST_CASE("field axioms hold exactly on random triples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 150; ++i) {
    BetaScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == BetaScalar());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == BetaScalar(1));
      CHECK(a / a == BetaScalar(1));
    }
  }
}

TEST_CASE("membership in Z[beta] and Q[beta]") {
  CHECK(BetaScalar(poly({0, -2, 0, 1})).is_in_z_beta());  // b^3 - 2b
  CHECK_FALSE(BetaScalar::rational(1, 2).is_in_z_beta());
  CHECK(BetaScalar::rational(1, 2).is_in_q_beta());
  // (b^2+b)/b normalizes to b+1
  BetaScalar v(poly({0, 1, 1}), poly({0, 1}));
  CHECK(v.is_in_z_beta());
  CHECK(v == BetaScalar(poly({1, 1})));
  CHECK_FALSE(BetaScalar(poly({1}), poly({1, 1})).is_in_q_beta());

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int i = 0; i < 100; ++i) {
    std::vector<Int> u{coeff(rng), coeff(rng)}, w{coeff(rng), coeff(rng)};
    BetaScalar a{BetaPoly(std::move(u))}, b{BetaPoly(std::move(w))};
    CHECK((a * b).is_in_z_beta());  // Z[beta] is closed under products
  }
}

TEST_CASE("division by zero raises the arithmetic error") {
  CHECK_THROWS_AS(BetaScalar(1) / BetaScalar(), division_by_zero);
  CHECK_THROWS_AS(BetaScalar().inverse(), division_by_zero);
  CHECK_THROWS_AS(BetaScalar(poly({1}), BetaPoly()), division_by_zero);
}

TEST_CASE("canonical text form") {
  CHECK(BetaScalar(poly({1, 1})).str() == "b + 1");
  CHECK(BetaScalar(poly({0, -2, 0, 1})).str() == "b^3 - 2*b");
  CHECK(BetaScalar::rational(3, 4).str() == "3 / 4");
  CHECK(BetaScalar(poly({1, 1}), poly({2})).str() == "(b + 1) / 2");
  CHECK(BetaScalar().str() == "0");
  CHECK(BetaScalar(poly({0, 1}), poly({0, 0, 2})).str() == "1 / 2*b");
}

TEST_CASE("laurent polynomials") {
  LaurentBetaPoly x = LaurentBetaPoly::monomial(3, -2);  // 3 b^{-2}
  CHECK(x.str() == "3*b^-2");
  CHECK_FALSE(x.is_beta_nonneg());
  CHECK_THROWS_AS(x.to_beta_poly(), std::logic_error);
  CHECK(x.shifted(2) == LaurentBetaPoly(Int(3)));
  CHECK(x.to_scalar() == BetaScalar(poly({3}), poly({0, 0, 1})));
  LaurentBetaPoly y = LaurentBetaPoly(poly({1, 1}));
  CHECK((x * y).min_exp() == -2);
  CHECK((y - y).is_zero());
  // round trip through the scalar field
  BetaScalar s = BetaScalar(poly({0, 0, 5}), poly({0, 1}));  // 5b
  CHECK(s.to_laurent() == LaurentBetaPoly::monomial(5, 1));
}

TEST_CASE("beta = 0 evaluation") {
  CHECK(BetaScalar(poly({3, 1})).at_beta_zero() == BetaScalar(3));
  CHECK(BetaScalar(poly({1, 2}), poly({2})).at_beta_zero() ==
        BetaScalar::rational(1, 2));
  CHECK_THROWS_AS(BetaScalar(poly({1}), poly({0, 1})).at_beta_zero(),
                  division_by_zero);
}

}  // TEST_SUITE
