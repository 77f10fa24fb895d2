#include "kq/pairing.hpp"

#include <algorithm>

#include "kq/finvar.hpp"

namespace kq {

PairingResult pair_functions(const PSeries& f, const PSeries& g) {
  int d = 0;
  for (const auto& [lam, c] : g.terms()) d = std::max(d, lam.weight());
  if (f.degree() < d)
    throw std::invalid_argument(
        "pair: left operand truncated below the right operand's degree");

  // Certificate at the full available depth; only coordinates of weight <= d
  // are read below, so the value is stable under deeper truncations.
  PGCoords fc = to_pG_coords(f, f.degree());
  if (!fc.member()) {
    const auto& [key, v] = *fc.residual.begin();
    throw membership_error("pair: left operand fails the membership "
                           "certificate; residual " +
                           key.str() + " -> " + v.str());
  }
  auto gc = to_pg_coords(g);
  for (const auto& [key, v] : gc)
    if (!key.all_odd())
      throw membership_error("pair: right operand has even p^[beta]-support on " +
                             key.str());

  BetaScalar value;
  for (const auto& [lam, cg] : gc) {
    BetaScalar cf = fc.odd.coords.count(lam) ? fc.odd.coords.at(lam) : BetaScalar();
    if (cf.is_zero()) continue;
    Int two_l = 1;
    for (int i = 0; i < lam.length(); ++i) two_l *= 2;
    value += cf * cg * BetaScalar::rational(z_lambda(lam), two_l);
  }
  return {value, d};
}

namespace {

// Re-index a polynomial in `nv` variables into a wider ring, mapping
// variable i to variable i + offset.
FinitePoly embed(const FinitePoly& a, int total, int offset) {
  FinitePoly r(total);
  for (const auto& [m, c] : a.terms()) {
    Monomial t(static_cast<size_t>(total), 0);
    for (size_t i = 0; i < m.size(); ++i) t[static_cast<size_t>(offset) + i] = m[i];
    r.add_term(t, c);
  }
  return r;
}

// The odd-partition route: sum over OP of 2^l z^{-1} p^{(beta)}_lambda(x)
// p^{[beta]}_lambda(y), truncated at total degree D.
TruncatedXSeries kernel_sum_route(int N, int M, int D) {
  int total = N + M;
  FinitePoly acc(total);
  for (const auto& lam : enumerate_partitions_up_to(D, PartitionClass::odd)) {
    if (lam.weight() + lam.length() > D) continue;  // below minimal degree
    FinitePoly fx = embed(specialize(p_lambda_G(lam, D), N).poly(), total, 0);
    FinitePoly fy = embed(
        specialize(p_lambda_g(lam).with_degree_bound(D), M).poly(), total, N);
    Int two_l = 1;
    for (int i = 0; i < lam.length(); ++i) two_l *= 2;
    acc += fx.mul_truncated(fy, D) * BetaScalar::rational(two_l, z_lambda(lam));
  }
  return TruncatedXSeries(std::move(acc), D);
}

// The product route: prod_{i,j} (1 - xbar_i y_j) / (1 - x_i y_j).
TruncatedXSeries kernel_product_route(int N, int M, int D) {
  int total = N + M;
  FinitePoly acc = FinitePoly::constant(BetaScalar(1), total);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < M; ++j) {
      FinitePoly top(total);  // 1 - xbar_i y_j = 1 + sum_k (-beta)^k x^{k+1} y
      top.add_term(Monomial(static_cast<size_t>(total), 0), BetaScalar(1));
      for (int k = 0; k + 2 <= D; ++k) {
        Monomial m(static_cast<size_t>(total), 0);
        m[static_cast<size_t>(i)] = k + 1;
        m[static_cast<size_t>(N + j)] = 1;
        top.add_term(m, BetaScalar(BetaPoly::monomial(k % 2 ? -1 : 1, k)));
      }
      FinitePoly bot(total);  // 1/(1 - x_i y_j) = sum_k (x_i y_j)^k
      for (int k = 0; 2 * k <= D; ++k) {
        Monomial m(static_cast<size_t>(total), 0);
        m[static_cast<size_t>(i)] = k;
        m[static_cast<size_t>(N + j)] = k;
        bot.add_term(m, BetaScalar(1));
      }
      acc = acc.mul_truncated(top, D).mul_truncated(bot, D);
    }
  }
  return TruncatedXSeries(std::move(acc), D);
}

// The classical kernel prod (1 + x_i y_j)/(1 - x_i y_j).
TruncatedXSeries kernel_classical(int N, int M, int D) {
  int total = N + M;
  FinitePoly acc = FinitePoly::constant(BetaScalar(1), total);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < M; ++j) {
      FinitePoly f(total);
      f.add_term(Monomial(static_cast<size_t>(total), 0), BetaScalar(1));
      for (int k = 1; 2 * k <= D; ++k) {
        Monomial m(static_cast<size_t>(total), 0);
        m[static_cast<size_t>(i)] = k;
        m[static_cast<size_t>(N + j)] = k;
        f.add_term(m, BetaScalar(2));
      }
      acc = acc.mul_truncated(f, D);
    }
  }
  return TruncatedXSeries(std::move(acc), D);
}

}  // namespace

bool cauchy_kernel_check(int N, int M, int D) {
  return kernel_sum_route(N, M, D) == kernel_product_route(N, M, D);
}

bool cauchy_kernel_check_beta0(int N, int M, int D) {
  TruncatedXSeries classical = kernel_classical(N, M, D);
  return kernel_sum_route(N, M, D).at_beta_zero() == classical &&
         kernel_product_route(N, M, D).at_beta_zero() == classical;
}

}  // namespace kq
