#pragma once

#include <map>

#include "kq/coeff.hpp"
#include "kq/partitions.hpp"

namespace kq {

/// Symmetric function in power-sum coordinates, truncated at total x-degree D.
///
/// A term lambda -> c means c * p_{lambda_1} p_{lambda_2} ... ; the empty
/// partition indexes the constant term.  All stored partitions have weight
/// <= D and no zero coefficients are kept, so the map is canonical.
class PSeries {
 public:
  explicit PSeries(int degree);
  static PSeries constant(const BetaScalar& c, int degree);
  static PSeries power_sum(int k, int degree);  // p_k
  static PSeries monomial(const Partition& lambda, const BetaScalar& c, int degree);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, BetaScalar>& terms() const { return terms_; }
  BetaScalar coeff(const Partition& lambda) const;
  /// Accumulate c into the lambda term (dropped if the sum is zero or the
  /// weight exceeds the truncation degree).
  void add_term(const Partition& lambda, const BetaScalar& c);

  /// Smallest weight carrying a nonzero term; degree()+1 when zero.
  int min_weight() const;

  PSeries operator-() const;
  PSeries operator+(const PSeries& o) const;
  PSeries operator-(const PSeries& o) const;
  PSeries operator*(const PSeries& o) const;
  PSeries operator*(const BetaScalar& c) const;
  PSeries& operator+=(const PSeries& o) { return *this = *this + o; }
  PSeries& operator-=(const PSeries& o) { return *this = *this - o; }
  bool operator==(const PSeries& o) const;
  bool operator!=(const PSeries& o) const { return !(*this == o); }

  /// Copy truncated at a lower degree bound.
  PSeries truncated(int d) const;
  /// Copy with a raised degree bound.  Only meaningful for values that are
  /// exact polynomials (the g-side families), not for truncated series.
  PSeries with_degree_bound(int d) const;
  /// The weight-w homogeneous component.
  PSeries graded_part(int w) const;
  /// Coefficient-wise evaluation at beta = 0.
  PSeries at_beta_zero() const;

 private:
  int degree_;
  std::map<Partition, BetaScalar> terms_;
};

inline PSeries operator*(const BetaScalar& c, const PSeries& a) { return a * c; }

/// Inverse of a series with invertible constant term, computed by the
/// geometric sum in the degree-graded ring.
PSeries pseries_invert(const PSeries& a);

/// Which beta-grading a family is homogeneous for: the K-theoretic families
/// carry deg(beta) = -1 (coefficient of p_lambda is a rational multiple of
/// beta^{|lambda|-n}); the dual families carry deg(beta) = +1.
enum class BetaGrading { sharp, dual };

bool is_homogeneous_beta_graded(const PSeries& a, int n,
                                BetaGrading grading = BetaGrading::sharp);

/// Truncated formal power series in an auxiliary variable z with PSeries
/// coefficients; all coefficients share one truncation degree.
class ZSeries {
 public:
  ZSeries(int order, int degree);
  static ZSeries one(int order, int degree);

  int order() const { return order_; }
  int degree() const { return degree_; }
  const PSeries& at(int k) const;
  void set(int k, PSeries v);

  ZSeries operator+(const ZSeries& o) const;
  ZSeries operator-(const ZSeries& o) const;
  bool operator==(const ZSeries& o) const;
  bool operator!=(const ZSeries& o) const { return !(*this == o); }

 private:
  int order_;
  int degree_;
  std::vector<PSeries> coeffs_;
};

ZSeries zseries_mul(const ZSeries& a, const ZSeries& b);
/// Multiplicative inverse up to the z-order; requires the constant
/// coefficient to be invertible.
ZSeries zseries_invert(const ZSeries& a);
/// Formal exponential; requires a(0) = 0.
ZSeries zseries_exp(const ZSeries& a);
/// Formal logarithm; requires a(0) = 1.
ZSeries zseries_log(const ZSeries& a);
/// Substitution z -> zbar = -z/(1+beta z), the K-theoretic inverse.
ZSeries substitute_zbar(const ZSeries& a);
/// Substitution z -> alpha*z + gamma (exact in the degree-truncated ring
/// when the z-order is at least the truncation degree).
ZSeries zseries_subst_affine(const ZSeries& a, const BetaScalar& alpha,
                             const BetaScalar& gamma);
/// Evaluation at a scalar z = gamma.
PSeries zseries_eval(const ZSeries& a, const BetaScalar& gamma);

}  // namespace kq
