#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace kq {

using Int = boost::multiprecision::cpp_int;

/// Thrown when a field operation divides by zero.
class division_by_zero : public std::runtime_error {
 public:
  division_by_zero() : std::runtime_error("division by zero in Q(beta)") {}
};

/// Generalized binomial coefficient with a possibly negative upper index.
/// For n < 0 the identity binom(n,k) = (-1)^k binom(-n+k-1,k) is used.
Int binom_signed(long long n, long long k);

/// Polynomial in the formal parameter beta with integer coefficients.
///
/// Coefficients are stored densely, coeffs_[k] being the coefficient of b^k,
/// with no trailing zeros, so each polynomial has a unique representation.
class BetaPoly {
 public:
  BetaPoly() = default;
  BetaPoly(int c) : BetaPoly(Int(c)) {}
  explicit BetaPoly(const Int& c);
  explicit BetaPoly(std::vector<Int> coeffs);

  /// c * b^k
  static BetaPoly monomial(const Int& c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree in beta; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(int k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int leading_coeff() const;

  BetaPoly operator-() const;
  BetaPoly operator+(const BetaPoly& o) const;
  BetaPoly operator-(const BetaPoly& o) const;
  BetaPoly operator*(const BetaPoly& o) const;
  bool operator==(const BetaPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const BetaPoly& o) const { return !(*this == o); }

  BetaPoly pow(int k) const;

  /// gcd of the absolute values of all coefficients; 0 for the zero polynomial.
  Int content() const;
  BetaPoly primitive_part() const;
  /// Exact division; throws std::logic_error if the division leaves a remainder.
  BetaPoly divexact(const BetaPoly& d) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Primitive gcd with positive leading coefficient (primitive PRS).
BetaPoly poly_gcd(BetaPoly a, BetaPoly b);

/// Laurent polynomial in beta over the integers: coefficients of b^k for
/// k in [min_exp, min_exp + coeffs.size()).  Intermediate values of the
/// K-even elimination live here, where negative powers of beta appear.
class LaurentBetaPoly {
 public:
  LaurentBetaPoly() = default;
  LaurentBetaPoly(int c) : LaurentBetaPoly(Int(c)) {}
  explicit LaurentBetaPoly(const Int& c);
  LaurentBetaPoly(const BetaPoly& p);

  static LaurentBetaPoly monomial(const Int& c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(int k) const;

  LaurentBetaPoly operator-() const;
  LaurentBetaPoly operator+(const LaurentBetaPoly& o) const;
  LaurentBetaPoly operator-(const LaurentBetaPoly& o) const;
  LaurentBetaPoly operator*(const LaurentBetaPoly& o) const;
  bool operator==(const LaurentBetaPoly& o) const {
    return min_exp_ == o.min_exp_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const LaurentBetaPoly& o) const { return !(*this == o); }

  /// Multiply by b^k (k may be negative).
  LaurentBetaPoly shifted(int k) const;

  /// True iff no negative power of beta occurs, i.e. the value is in Z[beta].
  bool is_beta_nonneg() const { return coeffs_.empty() || min_exp_ >= 0; }
  /// Conversion back to Z[beta]; throws std::logic_error on negative powers.
  BetaPoly to_beta_poly() const;
  /// Conversion into Q(beta) (always possible).
  class BetaScalar to_scalar() const;

  std::string str() const;

 private:
  void trim();
  int min_exp_ = 0;
  std::vector<Int> coeffs_;
};

/// Element of the field Q(beta), stored as a normalized fraction num/den of
/// integer-coefficient polynomials: gcd(num,den) = 1 over Q[beta], the pair
/// has integer content 1, and den has positive leading coefficient.  Two
/// equal values therefore have identical representations.
class BetaScalar {
 public:
  BetaScalar() : num_(), den_(Int(1)) {}
  BetaScalar(int c) : num_(Int(c)), den_(Int(1)) {}
  explicit BetaScalar(const Int& c) : num_(c), den_(Int(1)) {}
  explicit BetaScalar(const BetaPoly& p) : num_(p), den_(Int(1)) {}
  BetaScalar(BetaPoly num, BetaPoly den);

  static BetaScalar rational(const Int& p, const Int& q);
  /// b^k, k >= 0.
  static BetaScalar beta_pow(int k);

  const BetaPoly& num() const { return num_; }
  const BetaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  BetaScalar operator-() const;
  BetaScalar operator+(const BetaScalar& o) const;
  BetaScalar operator-(const BetaScalar& o) const;
  BetaScalar operator*(const BetaScalar& o) const;
  BetaScalar operator/(const BetaScalar& o) const;
  BetaScalar& operator+=(const BetaScalar& o) { return *this = *this + o; }
  BetaScalar& operator-=(const BetaScalar& o) { return *this = *this - o; }
  BetaScalar& operator*=(const BetaScalar& o) { return *this = *this * o; }
  bool operator==(const BetaScalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const BetaScalar& o) const { return !(*this == o); }

  BetaScalar inverse() const;

  /// Membership in Z[beta]: den = 1 after normalization.
  bool is_in_z_beta() const { return den_.is_one(); }
  /// Membership in Q[beta]: den is a nonzero integer.
  bool is_in_q_beta() const { return den_.is_constant(); }

  /// Value at beta = 0; throws division_by_zero if the denominator vanishes.
  BetaScalar at_beta_zero() const;

  /// True iff the value is (rational) * b^k for the given k.
  bool is_rational_beta_monomial(int k) const;

  /// Conversion into Z[beta^{+-1}]; requires den = +-b^k.
  LaurentBetaPoly to_laurent() const;

  std::string str() const;

 private:
  BetaPoly num_, den_;
};

inline BetaScalar operator*(int a, const BetaScalar& b) { return BetaScalar(a) * b; }

}  // namespace kq
