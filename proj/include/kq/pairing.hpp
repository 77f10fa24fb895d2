#pragma once

#include "kq/expand.hpp"

namespace kq {

/// Value of the bilinear form, with the truncation depth actually consumed.
/// Raising the left operand's truncation past degree_used cannot change the
/// value (stability witness).
struct PairingResult {
  BetaScalar value;
  int degree_used = 0;
};

/// <f,g> with f in the K-Q-cancellation algebra (certificate: zero residual
/// in p^{(beta)}-coordinates) and g a finite polynomial with odd
/// p^{[beta]}-support.  Computed in the defining coordinate normalization
/// <p_lambda^{(beta)}, p_mu^{[beta]}> = 2^{-l(lambda)} z_lambda delta.
PairingResult pair_functions(const PSeries& f, const PSeries& g);

/// Two-route verification of the Cauchy-kernel identity: the odd-partition
/// sum against the direct product expansion, in x_1..x_N, y_1..y_M truncated
/// at total degree D.
bool cauchy_kernel_check(int N, int M, int D);

/// The beta = 0 degeneration: both routes against the classical kernel
/// prod (1+x y)/(1-x y).
bool cauchy_kernel_check_beta0(int N, int M, int D);

}  // namespace kq
