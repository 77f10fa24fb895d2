#include "kq/psym.hpp"

#include <stdexcept>

namespace kq {

PSeries::PSeries(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("PSeries: negative degree");
}

PSeries PSeries::constant(const BetaScalar& c, int degree) {
  PSeries r(degree);
  r.add_term(Partition(), c);
  return r;
}

PSeries PSeries::power_sum(int k, int degree) {
  if (k <= 0) throw std::invalid_argument("power_sum: index must be positive");
  PSeries r(degree);
  r.add_term(Partition({k}), BetaScalar(1));
  return r;
}

PSeries PSeries::monomial(const Partition& lambda, const BetaScalar& c, int degree) {
  PSeries r(degree);
  r.add_term(lambda, c);
  return r;
}

BetaScalar PSeries::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BetaScalar() : it->second;
}

void PSeries::add_term(const Partition& lambda, const BetaScalar& c) {
  if (c.is_zero() || lambda.weight() > degree_) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    terms_.emplace(lambda, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int PSeries::min_weight() const {
  if (terms_.empty()) return degree_ + 1;
  return terms_.begin()->first.weight();
}

PSeries PSeries::operator-() const {
  PSeries r(degree_);
  for (const auto& [lam, c] : terms_) r.terms_.emplace(lam, -c);
  return r;
}

PSeries PSeries::operator+(const PSeries& o) const {
  if (degree_ != o.degree_)
    throw std::invalid_argument("PSeries: mismatched truncation degrees");
  PSeries r = *this;
  for (const auto& [lam, c] : o.terms_) r.add_term(lam, c);
  return r;
}

PSeries PSeries::operator-(const PSeries& o) const { return *this + (-o); }

PSeries PSeries::operator*(const PSeries& o) const {
  if (degree_ != o.degree_)
    throw std::invalid_argument("PSeries: mismatched truncation degrees");
  PSeries r(degree_);
  for (const auto& [la, ca] : terms_) {
    int wa = la.weight();
    for (const auto& [lb, cb] : o.terms_) {
      if (wa + lb.weight() > degree_) continue;
      r.add_term(la.concat(lb), ca * cb);
    }
  }
  return r;
}

PSeries PSeries::operator*(const BetaScalar& c) const {
  PSeries r(degree_);
  if (c.is_zero()) return r;
  for (const auto& [lam, v] : terms_) r.terms_.emplace(lam, v * c);
  return r;
}

bool PSeries::operator==(const PSeries& o) const {
  return degree_ == o.degree_ && terms_ == o.terms_;
}

PSeries PSeries::truncated(int d) const {
  if (d > degree_)
    throw std::invalid_argument("PSeries::truncated: can only lower the bound");
  PSeries r(d);
  for (const auto& [lam, c] : terms_) {
    if (lam.weight() > d) break;  // canonical order is weight-ascending
    r.terms_.emplace(lam, c);
  }
  return r;
}

PSeries PSeries::with_degree_bound(int d) const {
  if (d < degree_)
    throw std::invalid_argument("PSeries::with_degree_bound: use truncated() to lower");
  PSeries r(d);
  r.terms_ = terms_;
  return r;
}

PSeries PSeries::graded_part(int w) const {
  PSeries r(degree_);
  for (const auto& [lam, c] : terms_)
    if (lam.weight() == w) r.terms_.emplace(lam, c);
  return r;
}

PSeries PSeries::at_beta_zero() const {
  PSeries r(degree_);
  for (const auto& [lam, c] : terms_) r.add_term(lam, c.at_beta_zero());
  return r;
}

PSeries pseries_invert(const PSeries& a) {
  BetaScalar c0 = a.coeff(Partition());
  if (c0.is_zero())
    throw std::invalid_argument("pseries_invert: constant term is zero");
  int D = a.degree();
  BetaScalar inv0 = c0.inverse();
  // a = c0 (1 - w) with w of positive minimum weight.
  PSeries w = PSeries::constant(BetaScalar(1), D) - a * inv0;
  PSeries acc = PSeries::constant(BetaScalar(1), D);
  PSeries pw = PSeries::constant(BetaScalar(1), D);
  for (int k = 1; k <= D; ++k) {
    pw = pw * w;
    if (pw.is_zero()) break;
    acc += pw;
  }
  return acc * inv0;
}

bool is_homogeneous_beta_graded(const PSeries& a, int n, BetaGrading grading) {
  for (const auto& [lam, c] : a.terms()) {
    int e = grading == BetaGrading::sharp ? lam.weight() - n : n - lam.weight();
    if (e < 0) return false;
    if (!c.is_rational_beta_monomial(e)) return false;
  }
  return true;
}

// ---------- ZSeries ----------

ZSeries::ZSeries(int order, int degree) : order_(order), degree_(degree) {
  if (order < 0) throw std::invalid_argument("ZSeries: negative order");
  coeffs_.assign(static_cast<size_t>(order) + 1, PSeries(degree));
}

ZSeries ZSeries::one(int order, int degree) {
  ZSeries r(order, degree);
  r.set(0, PSeries::constant(BetaScalar(1), degree));
  return r;
}

const PSeries& ZSeries::at(int k) const {
  if (k < 0 || k > order_) throw std::out_of_range("ZSeries::at");
  return coeffs_[static_cast<size_t>(k)];
}

void ZSeries::set(int k, PSeries v) {
  if (k < 0 || k > order_) throw std::out_of_range("ZSeries::set");
  if (v.degree() != degree_)
    throw std::invalid_argument("ZSeries::set: mismatched truncation degrees");
  coeffs_[static_cast<size_t>(k)] = std::move(v);
}

ZSeries ZSeries::operator+(const ZSeries& o) const {
  if (order_ != o.order_ || degree_ != o.degree_)
    throw std::invalid_argument("ZSeries: mismatched order or degree");
  ZSeries r(order_, degree_);
  for (int k = 0; k <= order_; ++k) r.set(k, at(k) + o.at(k));
  return r;
}

ZSeries ZSeries::operator-(const ZSeries& o) const {
  if (order_ != o.order_ || degree_ != o.degree_)
    throw std::invalid_argument("ZSeries: mismatched order or degree");
  ZSeries r(order_, degree_);
  for (int k = 0; k <= order_; ++k) r.set(k, at(k) - o.at(k));
  return r;
}

bool ZSeries::operator==(const ZSeries& o) const {
  return order_ == o.order_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

ZSeries zseries_mul(const ZSeries& a, const ZSeries& b) {
  if (a.order() != b.order() || a.degree() != b.degree())
    throw std::invalid_argument("zseries_mul: mismatched order or degree");
  ZSeries r(a.order(), a.degree());
  for (int n = 0; n <= a.order(); ++n) {
    PSeries acc(a.degree());
    for (int k = 0; k <= n; ++k) {
      if (a.at(k).is_zero() || b.at(n - k).is_zero()) continue;
      acc += a.at(k) * b.at(n - k);
    }
    r.set(n, std::move(acc));
  }
  return r;
}

ZSeries zseries_invert(const ZSeries& a) {
  PSeries c0inv = pseries_invert(a.at(0));  // rejects non-invertible a(0)
  ZSeries r(a.order(), a.degree());
  r.set(0, c0inv);
  for (int n = 1; n <= a.order(); ++n) {
    PSeries acc(a.degree());
    for (int k = 1; k <= n; ++k) acc += a.at(k) * r.at(n - k);
    r.set(n, -(c0inv * acc));
  }
  return r;
}

ZSeries zseries_exp(const ZSeries& a) {
  if (!a.at(0).is_zero())
    throw std::invalid_argument("zseries_exp: constant coefficient must be 0");
  ZSeries r = ZSeries::one(a.order(), a.degree());
  ZSeries pw = ZSeries::one(a.order(), a.degree());
  Int fact = 1;
  for (int k = 1; k <= a.order(); ++k) {
    pw = zseries_mul(pw, a);
    fact *= Int(k);
    ZSeries term(a.order(), a.degree());
    BetaScalar c = BetaScalar::rational(1, fact);
    for (int j = k; j <= a.order(); ++j) term.set(j, pw.at(j) * c);
    r = r + term;
  }
  return r;
}

ZSeries zseries_log(const ZSeries& a) {
  PSeries one = PSeries::constant(BetaScalar(1), a.degree());
  if (a.at(0) != one)
    throw std::invalid_argument("zseries_log: constant coefficient must be 1");
  ZSeries u = a;
  u.set(0, PSeries(a.degree()));  // u = a - 1, vanishing at z = 0
  ZSeries r(a.order(), a.degree());
  ZSeries pw = ZSeries::one(a.order(), a.degree());
  for (int k = 1; k <= a.order(); ++k) {
    pw = zseries_mul(pw, u);
    BetaScalar c = BetaScalar::rational(k % 2 == 1 ? 1 : -1, k);
    ZSeries term(a.order(), a.degree());
    for (int j = k; j <= a.order(); ++j) term.set(j, pw.at(j) * c);
    r = r + term;
  }
  return r;
}

ZSeries substitute_zbar(const ZSeries& a) {
  // zbar^n = (-1)^n sum_j binom(-n,j) beta^j z^{n+j}
  ZSeries r(a.order(), a.degree());
  r.set(0, a.at(0));
  for (int n = 1; n <= a.order(); ++n) {
    if (a.at(n).is_zero()) continue;
    for (int j = 0; n + j <= a.order(); ++j) {
      Int sign = (n % 2 == 0) ? 1 : -1;
      BetaScalar c = BetaScalar(BetaPoly::monomial(sign * binom_signed(-n, j), j));
      r.set(n + j, r.at(n + j) + a.at(n) * c);
    }
  }
  return r;
}

ZSeries zseries_subst_affine(const ZSeries& a, const BetaScalar& alpha,
                             const BetaScalar& gamma) {
  ZSeries r(a.order(), a.degree());
  for (int n = 0; n <= a.order(); ++n) {
    if (a.at(n).is_zero()) continue;
    // (alpha z + gamma)^n
    for (int k = 0; k <= n; ++k) {
      BetaScalar c = BetaScalar(binom_signed(n, k));
      for (int i = 0; i < k; ++i) c *= alpha;
      for (int i = 0; i < n - k; ++i) c *= gamma;
      if (c.is_zero()) continue;
      r.set(k, r.at(k) + a.at(n) * c);
    }
  }
  return r;
}

PSeries zseries_eval(const ZSeries& a, const BetaScalar& gamma) {
  PSeries r(a.degree());
  BetaScalar g(1);
  for (int n = 0; n <= a.order(); ++n) {
    r += a.at(n) * g;
    g *= gamma;
  }
  return r;
}

}  // namespace kq
