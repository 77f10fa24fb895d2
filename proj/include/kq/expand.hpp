#pragma once

#include <map>

#include "kq/kqfam.hpp"
#include "kq/psym.hpp"

namespace kq {

/// Raised when an input fails a basis-membership certificate or a degree
/// block of the expansion system is inconsistent.
class membership_error : public std::runtime_error {
 public:
  explicit membership_error(const std::string& what) : std::runtime_error(what) {}
};

enum class Basis {
  pG_odd,
  qG_odd,
  ovqG_odd,
  qG_strict,
  ovqG_strict,
  pg_odd,
  qg_odd,
  ovqg_odd,
  qg_strict,
  ovqg_strict,
  GQ_odd,
};

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);
bool basis_is_g_side(Basis b);
PartitionClass basis_class(Basis b);

/// Coordinates of a symmetric function in one of the monomial bases.
struct Expansion {
  Basis basis;
  int degree;
  std::map<Partition, BetaScalar> coords;
};

/// Basis monomial for a class partition, as a PSeries at degree D.
PSeries basis_element(Basis b, const Partition& mu, int D);
/// sum coords(lambda) * basis_element(lambda); the round-trip witness.
PSeries recombine(const Expansion& e);

/// Coordinates of a in the monomials of p^{(beta)}: the odd-partition part
/// plus the even-touching residual.  The residual is the membership
/// certificate for the K-Q-cancellation algebra: it vanishes exactly when a
/// lies in it (up to degree D).
struct PGCoords {
  Expansion odd;                              // basis pG_odd
  std::map<Partition, BetaScalar> residual;   // partitions with an even part
  bool member() const { return residual.empty(); }
};

PGCoords to_pG_coords(const PSeries& a, int D);

/// Exact coordinates of a polynomial in the monomials of p^{[beta]}
/// (triangular substitution; no truncation).
std::map<Partition, BetaScalar> to_pg_coords(const PSeries& a);

/// Column order of the per-weight linear systems; solutions must agree for
/// both (full-rank uniqueness witness).
enum class UnknownOrder { canonical, reversed };

Expansion expand_in_basis(const PSeries& a, Basis basis, int D,
                          UnknownOrder order = UnknownOrder::canonical);

/// Expansion in monomials of GQ_1, GQ_3, GQ_5, ...
Expansion expand_GQ_basis(const PSeries& a, int D);

/// Polynomial in formal generators indexed by positive integers (the odd
/// gp's, or the c-coefficients of the K-even elimination) with coefficients
/// in Z[beta, beta^{-1}].
class FormalGPPoly {
 public:
  FormalGPPoly() = default;
  static FormalGPPoly variable(int index);
  static FormalGPPoly constant(const LaurentBetaPoly& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, LaurentBetaPoly>& terms() const { return terms_; }
  LaurentBetaPoly coeff(const Partition& key) const;
  void add_term(const Partition& key, const LaurentBetaPoly& c);

  FormalGPPoly operator-() const;
  FormalGPPoly operator+(const FormalGPPoly& o) const;
  FormalGPPoly operator-(const FormalGPPoly& o) const;
  FormalGPPoly operator*(const FormalGPPoly& o) const;
  FormalGPPoly operator*(const LaurentBetaPoly& c) const;
  FormalGPPoly& operator+=(const FormalGPPoly& o) { return *this = *this + o; }
  FormalGPPoly& operator-=(const FormalGPPoly& o) { return *this = *this - o; }
  bool operator==(const FormalGPPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const FormalGPPoly& o) const { return !(*this == o); }

  /// Replace every occurrence of the given generator by a polynomial.
  FormalGPPoly substituted(int index, const FormalGPPoly& value) const;
  bool depends_on(int index) const;
  /// True iff every coefficient is free of beta^{-1}.
  bool coefficients_in_z_beta() const;

 private:
  std::map<Partition, LaurentBetaPoly> terms_;
};

/// Cauchy product of coefficient vectors (entry k = coefficient of z^k).
std::vector<FormalGPPoly> formal_series_mul(const std::vector<FormalGPPoly>& a,
                                            const std::vector<FormalGPPoly>& b,
                                            int order);
/// f - f^2 + f^3 - ... (alternating) or f + f^2 + ... ; f must have zero
/// constant coefficient.
std::vector<FormalGPPoly> formal_geometric(const std::vector<FormalGPPoly>& f,
                                           bool alternating, int order);

/// K-even elimination: expresses c_2, c_4, ..., c_{2 floor(M/2)} as
/// polynomials in the odd c's.  Every output is asserted beta^{-1}-free.
std::map<int, FormalGPPoly> keven_reduce(int M);

/// Each even-index gp as a Z[beta]-polynomial in the odd gp's.
std::map<int, FormalGPPoly> gp_even_to_odd(int n_max);

/// Evaluate a formal gp-polynomial in the concrete ring at degree D.
PSeries eval_formal_gp(const FormalGPPoly& f, int D);

}  // namespace kq
