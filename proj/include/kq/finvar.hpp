#pragma once

#include <map>
#include <vector>

#include "kq/psym.hpp"

namespace kq {

/// Exponent vector; length always equals the owning polynomial's nvars.
using Monomial = std::vector<int>;

/// Term order for finite-variable polynomials: total degree ascending,
/// then lexicographically descending.  Matches the serialized term order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial in finitely many variables over Q(beta).  Exact (no degree
/// bound); substitutions that break symmetry keep full exponent vectors.
class FinitePoly {
 public:
  explicit FinitePoly(int nvars);
  static FinitePoly constant(const BetaScalar& c, int nvars);
  static FinitePoly variable(int i, int nvars);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, BetaScalar, MonomialOrder>& terms() const {
    return terms_;
  }
  BetaScalar coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const BetaScalar& c);

  int total_degree() const;  // -1 for the zero polynomial

  FinitePoly operator-() const;
  FinitePoly operator+(const FinitePoly& o) const;
  FinitePoly operator-(const FinitePoly& o) const;
  FinitePoly operator*(const FinitePoly& o) const;
  FinitePoly operator*(const BetaScalar& c) const;
  FinitePoly& operator+=(const FinitePoly& o) { return *this = *this + o; }
  FinitePoly& operator-=(const FinitePoly& o) { return *this = *this - o; }
  bool operator==(const FinitePoly& o) const;
  bool operator!=(const FinitePoly& o) const { return !(*this == o); }

  /// Product with all result terms of total degree > d dropped.
  FinitePoly mul_truncated(const FinitePoly& o, int d) const;
  FinitePoly truncated(int d) const;
  FinitePoly at_beta_zero() const;

 private:
  int nvars_;
  std::map<Monomial, BetaScalar, MonomialOrder> terms_;
};

/// Power series in x_1..x_N truncated at a total-degree bound.
class TruncatedXSeries {
 public:
  TruncatedXSeries(int nvars, int degree);
  TruncatedXSeries(FinitePoly p, int degree);

  int nvars() const { return poly_.nvars(); }
  int degree() const { return degree_; }
  const FinitePoly& poly() const { return poly_; }

  TruncatedXSeries operator+(const TruncatedXSeries& o) const;
  TruncatedXSeries operator-(const TruncatedXSeries& o) const;
  TruncatedXSeries operator*(const TruncatedXSeries& o) const;
  bool operator==(const TruncatedXSeries& o) const;
  bool operator!=(const TruncatedXSeries& o) const { return !(*this == o); }

  TruncatedXSeries at_beta_zero() const;

 private:
  int degree_;
  FinitePoly poly_;
};

/// Substitute p_k -> x_1^k + ... + x_N^k; the degree bound is inherited.
TruncatedXSeries specialize(const PSeries& a, int N);

/// x_1 = t, x_2 = -t - beta (exact polynomial substitution); true iff every
/// coefficient of a positive power of t vanishes.
bool check_dual_cancellation(const FinitePoly& a);
bool check_dual_cancellation(const TruncatedXSeries& a);

/// x_1 = t, x_2 = tbar = -t/(1+beta t) expanded as a t-series; true iff the
/// coefficients of t^1..t^{t_order} vanish within the combined-degree
/// truncation inherited from a.  t_order defaults to a's degree bound.
bool check_kq_cancellation(const TruncatedXSeries& a, int t_order);
bool check_kq_cancellation(const TruncatedXSeries& a);

/// Root specifications for exact synthetic division in the last variable
/// ("z"): z = -beta divides out (z + beta); z = -2/beta divides out
/// (2 + beta z), working over Laurent coefficients.
enum class LinearRoot { minus_beta, minus_two_over_beta };

/// Exact quotient of a by the linear factor named by the root.  Throws
/// std::logic_error if a does not vanish at the root, or (for the Laurent
/// case) if a negative power of beta survives in the result.
FinitePoly divide_out_linear(const FinitePoly& a, LinearRoot root);

/// Coefficients of a with respect to the last variable ("z"): entry k is a
/// polynomial with z-exponent zero.
std::vector<FinitePoly> z_coefficients(const FinitePoly& a);
FinitePoly from_z_coefficients(const std::vector<FinitePoly>& coeffs, int nvars);
/// Cauchy product of z-coefficient vectors up to z-order `order`.
std::vector<FinitePoly> z_coeff_mul(const std::vector<FinitePoly>& a,
                                    const std::vector<FinitePoly>& b, int order);
/// Series inverse up to z-order `order`; requires coeffs[0] = 1.
std::vector<FinitePoly> z_coeff_invert(const std::vector<FinitePoly>& a,
                                       int order, int nvars);

}  // namespace kq
