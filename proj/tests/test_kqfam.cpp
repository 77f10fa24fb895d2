#include <doctest.h>

#include <thread>

#include "kq/expand.hpp"
#include "kq/kqfam.hpp"

using namespace kq;

namespace {

BetaScalar beta_frac(int num, int bexp, int den) {
  return BetaScalar(BetaPoly::monomial(num, bexp), BetaPoly(Int(den)));
}

PSeries one(int D) { return PSeries::constant(BetaScalar(1), D); }

// Classical q_n (beta = 0) from the finite-variable product
// prod_i (1+x_i z)/(1-x_i z); independent of the power-sum route.
FinitePoly classical_q_product(int n, int N) {
  int nv = N + 1;
  FinitePoly A = FinitePoly::constant(BetaScalar(1), nv);
  FinitePoly C = A;
  FinitePoly z = FinitePoly::variable(N, nv);
  for (int i = 0; i < N; ++i) {
    FinitePoly xi = FinitePoly::variable(i, nv);
    A = A * (FinitePoly::constant(BetaScalar(1), nv) + xi * z);
    C = C * (FinitePoly::constant(BetaScalar(1), nv) - xi * z);
  }
  auto coeffs = z_coeff_mul(z_coefficients(A),
                            z_coeff_invert(z_coefficients(C), n, nv), n);
  FinitePoly out(N);
  for (const auto& [m, c] : coeffs[static_cast<size_t>(n)].terms())
    out.add_term(Monomial(m.begin(), m.end() - 1), c);
  return out;
}

}  // namespace

TEST_SUITE("kqfam") {

TEST_CASE("p_beta_G examples") {
  PSeries want(3);
  want.add_term(Partition({1}), BetaScalar(1));
  want.add_term(Partition({2}), beta_frac(-1, 1, 2));
  want.add_term(Partition({3}), beta_frac(1, 2, 4));
  CHECK(p_beta_G(1, 3) == want);
  CHECK(p_beta_G(3, 3) == PSeries::power_sum(3, 3));
  CHECK(p_beta_G(5, 8).at_beta_zero() == PSeries::power_sum(5, 8));
  CHECK_THROWS_AS(p_beta_G(2, 4), std::invalid_argument);
  CHECK_FALSE(p_beta_G(2, 4, /*allow_even=*/true).is_zero());
}

TEST_CASE("p_beta_g examples") {
  CHECK(p_beta_g(1) == PSeries::power_sum(1, 1));
  PSeries want(3);
  want.add_term(Partition({3}), BetaScalar(1));
  want.add_term(Partition({2}), beta_frac(3, 1, 2));
  want.add_term(Partition({1}), beta_frac(3, 2, 4));
  CHECK(p_beta_g(3) == want);
  CHECK(p_beta_g(4).at_beta_zero() == PSeries::power_sum(4, 4));
  for (int n = 1; n <= 5; n += 2)
    CHECK(is_homogeneous_beta_graded(p_beta_G(n, 8), n));
  for (int n = 1; n <= 5; ++n) {
    CHECK(is_homogeneous_beta_graded(p_beta_g(n), n, BetaGrading::dual));
    CHECK(is_homogeneous_beta_graded(ovq_beta_g(n), n, BetaGrading::dual));
  }
}

TEST_CASE("q_beta_G basics") {
  CHECK(q_beta_G(0, 5) == one(5));
  // q_1 = 2p_1 - b p_2 + b^2 p_3 - ...
  PSeries q1 = q_beta_G(1, 4);
  CHECK(q1.coeff(Partition({1})) == BetaScalar(2));
  CHECK(q1.coeff(Partition({2})) == -BetaScalar::beta_pow(1));
  CHECK(q1.coeff(Partition({3})) == BetaScalar::beta_pow(2));
  for (int n = 1; n <= 5; ++n)
    CHECK(is_homogeneous_beta_graded(q_beta_G(n, 8), n));
}

TEST_CASE("classical degeneration via the product oracle") {
  for (int n = 1; n <= 5; ++n) {
    FinitePoly cq = classical_q_product(n, 3);
    TruncatedXSeries got = specialize(q_beta_G(n, 8), 3).at_beta_zero();
    CHECK(got == TruncatedXSeries(cq, 8));
    TruncatedXSeries got_dual = specialize(q_beta_g(n), 3).at_beta_zero();
    CHECK(got_dual == TruncatedXSeries(cq, n));
  }
  // classical q_1 = 2 p_1
  CHECK(q_beta_G(1, 6).at_beta_zero() ==
        PSeries::power_sum(1, 6) * BetaScalar(2));
}

TEST_CASE("ovq_beta_G") {
  int D = 8;
  CHECK(ovq_beta_G(1, D) == -q_beta_G(1, D));
  ZSeries q = q_beta_G_series(6, D);
  ZSeries ovq = ovq_beta_G_series(6, D);
  CHECK(zseries_mul(q, ovq) == ZSeries::one(6, D));
  for (int n = 1; n <= 5; ++n)
    CHECK(is_homogeneous_beta_graded(ovq_beta_G(n, D), n));
}

TEST_CASE("q_beta_g single-variable values") {
  FinitePoly q1(1), q2(1);
  q1.add_term({1}, BetaScalar(2));
  q2.add_term({2}, BetaScalar(2));
  q2.add_term({1}, -BetaScalar::beta_pow(1));
  CHECK(specialize(q_beta_g(1), 1) == TruncatedXSeries(q1, 1));
  CHECK(specialize(q_beta_g(2), 1) == TruncatedXSeries(q2, 2));
  for (int n = 1; n <= 6; ++n)
    CHECK(is_homogeneous_beta_graded(q_beta_g(n), n, BetaGrading::dual));
}

TEST_CASE("dual generating series inverts cleanly") {
  ZSeries q = q_beta_g_series(6);
  CHECK(zseries_mul(zseries_invert(q), q) == ZSeries::one(6, 6));
}

TEST_CASE("ovq_beta_g examples and recurrence") {
  CHECK(ovq_beta_g(1) == -q_beta_g(1));
  CHECK(ovq_beta_g(2) ==
        q_beta_g(2) + q_beta_g(1).with_degree_bound(2) * BetaScalar::beta_pow(1));
  for (int n = 1; n <= 6; ++n) {
    PSeries acc(n);
    for (int k = 0; k <= n; ++k) {
      PSeries a = q_beta_g(n - k).with_degree_bound(n);
      PSeries b = k == 0 ? one(n) : ovq_beta_g(k).with_degree_bound(n);
      acc += a * b;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("GQ values") {
  int D = 6;
  CHECK(GQ(0, D) == one(D));
  CHECK(GQ(-2, D) == PSeries::constant(BetaScalar::beta_pow(2), D));
  CHECK(GQ(1, D).coeff(Partition({1})) == BetaScalar(2));
  for (int n = 1; n <= 4; ++n) {
    CHECK(is_homogeneous_beta_graded(GQ(n, D), n));
    CHECK(GQ(n, D).at_beta_zero() ==
          q_beta_G(n, D).at_beta_zero());  // collapses to classical q_n
  }
  // truncation coherence
  CHECK(GQ(3, 8).truncated(5) == GQ(3, 5));
  CHECK(q_beta_G(3, 8).truncated(5) == q_beta_G(3, 5));
  CHECK(p_beta_G(3, 8).truncated(5) == p_beta_G(3, 5));
  CHECK(ovq_beta_G(3, 8).truncated(5) == ovq_beta_G(3, 5));
}

TEST_CASE("GQ_finite") {
  // one variable: GQ_n(x) = x^n (2 + b x)
  for (int n = 1; n <= 4; ++n) {
    FinitePoly want(1);
    want.add_term({n}, BetaScalar(2));
    want.add_term({n + 1}, BetaScalar::beta_pow(1));
    CHECK(GQ_finite(n, 1) == want);
  }
  // beta = 0, N = 2, n = 1: classical q_1 = 2(x1 + x2)
  FinitePoly want(2);
  want.add_term({1, 0}, BetaScalar(2));
  want.add_term({0, 1}, BetaScalar(2));
  CHECK(GQ_finite(1, 2).at_beta_zero() == want);
  // agreement with the series route
  for (int n = 1; n <= 4; ++n)
    for (int N = 1; N <= 2; ++N) {
      int D = n + 4;
      CHECK(TruncatedXSeries(GQ_finite(n, N), D) == specialize(GQ(n, D), N));
    }
}

TEST_CASE("gp values") {
  FinitePoly x(1), want2(1);
  x.add_term({1}, BetaScalar(1));
  CHECK(specialize(gp(1), 1) == TruncatedXSeries(x, 1));
  want2.add_term({2}, BetaScalar(1));
  want2.add_term({1}, -BetaScalar::beta_pow(1));
  CHECK(specialize(gp(2), 1) == TruncatedXSeries(want2, 2));
  // gp_2 = gp_1^2 - b gp_1 in the concrete ring
  PSeries g1 = gp(1).with_degree_bound(2);
  CHECK(gp(2) == g1 * g1 - g1 * BetaScalar::beta_pow(1));
  for (int n = 1; n <= 4; ++n) {
    CHECK(gp(n).at_beta_zero() ==
          q_beta_g(n).at_beta_zero() * BetaScalar::rational(1, 2));
    CHECK(is_homogeneous_beta_graded(gp(n), n, BetaGrading::dual));
  }
}

TEST_CASE("recurrence tail lies above weight 2n") {
  // q_{2n} - [q_{2n-1}q_1 - ... + (-1)^{n+1} q_n^2/2] has only strict-basis
  // coordinates of weight > 2n.
  int D = 8;
  ZSeries q = q_beta_G_series(D, D);
  for (int n = 1; n <= 3; ++n) {
    PSeries r = q.at(2 * n);
    for (int j = 1; j <= n - 1; ++j) {
      PSeries term = q.at(2 * n - j) * q.at(j);
      r = (j % 2 == 1) ? r - term : r + term;
    }
    PSeries sq = q.at(n) * q.at(n) * BetaScalar::rational(1, 2);
    r = (n % 2 == 1) ? r - sq : r + sq;
    Expansion e = expand_in_basis(r, Basis::qG_strict, D);
    for (const auto& [mu, c] : e.coords) CHECK(mu.weight() > 2 * n);
  }
}

TEST_CASE("constructors are safe to call concurrently") {
  std::vector<std::thread> workers;
  std::vector<PSeries> results(8, PSeries(6));
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([t, &results] {
      results[static_cast<size_t>(t)] = q_beta_G(1 + t % 4, 6) * gp(2).with_degree_bound(6);
    });
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t)
    CHECK(results[static_cast<size_t>(t)] ==
          q_beta_G(1 + t % 4, 6) * gp(2).with_degree_bound(6));
}

TEST_CASE("family dispatch and validation") {
  CHECK(family_element({"qG", 2}, 5) == q_beta_G(2, 5));
  CHECK(family_element({"gp", 2}, 5) == gp(2));
  CHECK(family_element({"GQ", -1}, 5) ==
        PSeries::constant(-BetaScalar::beta_pow(1), 5));
  CHECK_FALSE(is_valid_family_id({"qX", 1}));
  CHECK_FALSE(is_valid_family_id({"gp", 0}));
  CHECK(is_valid_family_id({"GQ", -3}));
  CHECK_THROWS_AS(family_element({"nope", 1}, 4), std::invalid_argument);
}

}  // TEST_SUITE
