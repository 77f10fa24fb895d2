#include <doctest.h>

#include <random>

#include "kq/finvar.hpp"
#include "kq/kqfam.hpp"

using namespace kq;

namespace {

FinitePoly rand_poly(std::mt19937& rng, int nvars, int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-3, 3);
  FinitePoly r(nvars);
  for (int t = 0; t < 4; ++t) {
    Monomial m(static_cast<size_t>(nvars), 0);
    int budget = max_deg;
    for (int i = 0; i < nvars; ++i) {
      int v = std::min(e(rng), budget);
      m[static_cast<size_t>(i)] = v;
      budget -= v;
    }
    r.add_term(m, BetaScalar(c(rng)) + BetaScalar::beta_pow(1) * BetaScalar(c(rng)));
  }
  return r;
}

PSeries random_pseries(std::mt19937& rng, int D) {
  PSeries r(D);
  std::uniform_int_distribution<int> w(0, D), c(-3, 3);
  for (int t = 0; t < 4; ++t) {
    auto parts = enumerate_partitions(w(rng), PartitionClass::all);
    std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
    r.add_term(parts[pick(rng)], BetaScalar(c(rng)));
  }
  return r;
}

}  // namespace

TEST_SUITE("finvar") {

TEST_CASE("specialize basics") {
  PSeries p2 = PSeries::power_sum(2, 3);
  FinitePoly want(2);
  want.add_term({2, 0}, BetaScalar(1));
  want.add_term({0, 2}, BetaScalar(1));
  CHECK(specialize(p2, 2) == TruncatedXSeries(want, 3));

  PSeries p11 = PSeries::monomial(Partition({1, 1}), BetaScalar(1), 3);
  FinitePoly x2(1);
  x2.add_term({2}, BetaScalar(1));
  CHECK(specialize(p11, 1) == TruncatedXSeries(x2, 3));

  // q_1^[beta] in one variable is 2x
  FinitePoly twox(1);
  twox.add_term({1}, BetaScalar(2));
  CHECK(specialize(q_beta_g(1), 1) == TruncatedXSeries(twox, 1));
}

TEST_CASE("specialize is a ring homomorphism") {
  std::mt19937 rng(17);
  for (int i = 0; i < 40; ++i) {
    PSeries a = random_pseries(rng, 5), b = random_pseries(rng, 5);
    CHECK(specialize(a * b, 3) == specialize(a, 3) * specialize(b, 3));
    CHECK(specialize(a + b, 3) == specialize(a, 3) + specialize(b, 3));
  }
}

TEST_CASE("dual cancellation") {
  // p_1^[beta] = p_1: t + (-t-b) + x3 = x3 - b, independent of t
  CHECK(check_dual_cancellation(specialize(p_beta_g(1), 3)));
  CHECK_FALSE(check_dual_cancellation(specialize(PSeries::power_sum(2, 4), 3)));
  CHECK(check_dual_cancellation(FinitePoly::constant(BetaScalar(7), 2)));
  CHECK_THROWS_AS(check_dual_cancellation(FinitePoly::constant(BetaScalar(1), 1)),
                  std::invalid_argument);
}

TEST_CASE("K-Q cancellation") {
  CHECK(check_kq_cancellation(specialize(q_beta_G(3, 9), 3), 6));
  CHECK_FALSE(check_kq_cancellation(specialize(PSeries::power_sum(2, 8), 3), 6));
  CHECK(check_kq_cancellation(
      TruncatedXSeries(FinitePoly::constant(BetaScalar(1), 2), 6), 4));
}

TEST_CASE("divide_out_linear at z = -beta") {
  int nv = 2;  // one x variable plus z
  FinitePoly z = FinitePoly::variable(1, nv);
  FinitePoly beta = FinitePoly::constant(BetaScalar::beta_pow(1), nv);
  FinitePoly zb = z + beta;
  CHECK(divide_out_linear(zb, LinearRoot::minus_beta) ==
        FinitePoly::constant(BetaScalar(1), nv));
  // (z^2 - b^2) / (z + b) = z - b
  CHECK(divide_out_linear(z * z - beta * beta, LinearRoot::minus_beta) == z - beta);
  CHECK_THROWS_AS(divide_out_linear(z * z, LinearRoot::minus_beta), std::logic_error);

  std::mt19937 rng(43);
  for (int i = 0; i < 30; ++i) {
    FinitePoly p = rand_poly(rng, nv, 3);
    CHECK(divide_out_linear(p * zb, LinearRoot::minus_beta) == p);
  }
}

TEST_CASE("divide_out_linear at z = -2/beta over Laurent coefficients") {
  int nv = 2;
  FinitePoly z = FinitePoly::variable(1, nv);
  FinitePoly factor =
      FinitePoly::constant(BetaScalar(2), nv) + z * BetaScalar::beta_pow(1);
  std::mt19937 rng(47);
  for (int i = 0; i < 30; ++i) {
    // integer-coefficient polynomials stay recoverable
    std::uniform_int_distribution<int> c(-3, 3), e(0, 2);
    FinitePoly p(nv);
    for (int t = 0; t < 3; ++t) {
      Monomial m{e(rng), e(rng)};
      p.add_term(m, BetaScalar(BetaPoly::monomial(c(rng), e(rng))));
    }
    if (p.is_zero()) continue;
    CHECK(divide_out_linear(p * factor, LinearRoot::minus_two_over_beta) == p);
  }
  CHECK_THROWS_AS(divide_out_linear(z + FinitePoly::constant(BetaScalar(1), nv),
                                    LinearRoot::minus_two_over_beta),
                  std::logic_error);
}

TEST_CASE("GQ generating numerator in one variable") {
  // prod(1+x(z+b)) prod(1+bx) - prod(1-xz) over {x, z} divided by (z+b)
  // equals 2x + b x^2.
  int nv = 2;
  FinitePoly x = FinitePoly::variable(0, nv), z = FinitePoly::variable(1, nv);
  FinitePoly one = FinitePoly::constant(BetaScalar(1), nv);
  BetaScalar b = BetaScalar::beta_pow(1);
  FinitePoly numer =
      (one + x * z + x * b) * (one + x * b) - (one - x * z);
  FinitePoly quotient = divide_out_linear(numer, LinearRoot::minus_beta);
  FinitePoly want(nv);
  want.add_term({1, 0}, BetaScalar(2));
  want.add_term({2, 0}, b);
  CHECK(quotient == want);
}

TEST_CASE("z-coefficient helpers") {
  int nv = 2;
  FinitePoly x = FinitePoly::variable(0, nv), z = FinitePoly::variable(1, nv);
  FinitePoly one = FinitePoly::constant(BetaScalar(1), nv);
  FinitePoly a = one - x * z;
  auto inv = z_coeff_invert(z_coefficients(a), 4, nv);
  // geometric series: coefficient k is x^k
  for (int k = 0; k <= 4; ++k) {
    FinitePoly want(nv);
    Monomial m{k, 0};
    want.add_term(m, BetaScalar(1));
    CHECK(inv[static_cast<size_t>(k)] == want);
  }
  auto prod = z_coeff_mul(z_coefficients(a), inv, 4);
  CHECK(prod[0] == one);
  for (int k = 1; k <= 4; ++k) CHECK(prod[static_cast<size_t>(k)].is_zero());
  CHECK(from_z_coefficients(z_coefficients(a), nv) == a);
}

}  // TEST_SUITE
