#pragma once

#include <string>

#include "kq/finvar.hpp"
#include "kq/psym.hpp"

namespace kq {

/// Name of a family element as used by the CLI and JSON output.
/// Tags: pG pg qG qg ovqG ovqg GQ gp.  Index n >= 1 everywhere except GQ,
/// where any integer is allowed (GQ_{-n} = (-beta)^n).
struct FamilyId {
  std::string tag;
  int n = 0;
};

bool is_valid_family_tag(const std::string& tag);
bool is_valid_family_id(const FamilyId& id);

/// beta-deformed power sum p_n(x/(1+(beta/2)x)), truncated at degree D.
/// Only odd indices lie in the K-Q-cancellation algebra; even indices are
/// rejected unless allow_even is set (tests use them as non-members).
PSeries p_beta_G(int n, int D, bool allow_even = false);

/// Dual beta-deformed power sum; exact polynomial of top degree n.
PSeries p_beta_g(int n);

/// Generating function of the q^{(beta)} family up to z-order n_max at
/// truncation degree D, via exp of sum_k (z^k/k)(p_k - p_k(xbar)).
ZSeries q_beta_G_series(int n_max, int D);
PSeries q_beta_G(int n, int D);

/// The bar variant, computed as the series inverse of q_beta_G_series.
ZSeries ovq_beta_G_series(int n_max, int D);
PSeries ovq_beta_G(int n, int D);

/// Generating function of the dual q^{[beta]} family; each coefficient is an
/// exact polynomial of top degree n, so degree n_max is exact.
ZSeries q_beta_g_series(int n_max);
PSeries q_beta_g(int n);

/// ovq_n^{[beta]} = (-1)^n sum_{l<n} binom(n-1,l) beta^l q_{n-l}^{[beta]}.
PSeries ovq_beta_g(int n);

/// One-row K-theoretic Q-function.  n <= 0 gives the constant (-beta)^{-n};
/// n >= 1 is the series quotient of the two (-beta)-weighted q-sums.
PSeries GQ(int n, int D);

/// Finite-variable GQ_n(x_1..x_N) through the factor-theorem construction;
/// the result is an exact polynomial whose coefficients are checked to lie
/// in Z[beta] (failure indicates an implementation bug).
FinitePoly GQ_finite(int n, int N);

/// gp_n = (1/2) sum_{i<n} (-beta/2)^i q_{n-i}^{[beta]}; exact of degree n.
PSeries gp(int n);

/// sum_{l=0..D} (-beta)^l q_l^{(beta)}, the shared denominator of the GQ
/// and ovq expansions.
PSeries q_gen_denominator(int D);

/// Products over the parts of a partition.
PSeries p_lambda_G(const Partition& lambda, int D);
PSeries p_lambda_g(const Partition& lambda);
PSeries q_lambda_G(const Partition& lambda, int D);
PSeries q_lambda_g(const Partition& lambda);

/// CLI dispatch; D is used by the truncated (G-side) families, the exact
/// g-side families come back at their own top degree.
PSeries family_element(const FamilyId& id, int D);

}  // namespace kq
