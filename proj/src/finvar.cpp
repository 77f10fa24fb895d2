#include "kq/finvar.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kq {

namespace {

int mono_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

}  // namespace

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  return a > b;  // lexicographically descending within a degree
}

FinitePoly::FinitePoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("FinitePoly: negative nvars");
}

FinitePoly FinitePoly::constant(const BetaScalar& c, int nvars) {
  FinitePoly r(nvars);
  r.add_term(Monomial(static_cast<size_t>(nvars), 0), c);
  return r;
}

FinitePoly FinitePoly::variable(int i, int nvars) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("FinitePoly::variable");
  FinitePoly r(nvars);
  Monomial m(static_cast<size_t>(nvars), 0);
  m[static_cast<size_t>(i)] = 1;
  r.add_term(m, BetaScalar(1));
  return r;
}

BetaScalar FinitePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BetaScalar() : it->second;
}

void FinitePoly::add_term(const Monomial& m, const BetaScalar& c) {
  if (static_cast<int>(m.size()) != nvars_)
    throw std::invalid_argument("FinitePoly: exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int FinitePoly::total_degree() const {
  if (terms_.empty()) return -1;
  return mono_degree(terms_.rbegin()->first);
}

FinitePoly FinitePoly::operator-() const {
  FinitePoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

FinitePoly FinitePoly::operator+(const FinitePoly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("FinitePoly: nvars mismatch");
  FinitePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

FinitePoly FinitePoly::operator-(const FinitePoly& o) const { return *this + (-o); }

FinitePoly FinitePoly::operator*(const FinitePoly& o) const {
  return mul_truncated(o, -1);
}

FinitePoly FinitePoly::mul_truncated(const FinitePoly& o, int d) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("FinitePoly: nvars mismatch");
  FinitePoly r(nvars_);
  for (const auto& [ma, ca] : terms_) {
    int da = mono_degree(ma);
    for (const auto& [mb, cb] : o.terms_) {
      if (d >= 0 && da + mono_degree(mb) > d) continue;
      Monomial m(ma);
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

FinitePoly FinitePoly::operator*(const BetaScalar& c) const {
  FinitePoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

bool FinitePoly::operator==(const FinitePoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

FinitePoly FinitePoly::truncated(int d) const {
  FinitePoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (mono_degree(m) > d) break;  // map order is degree-ascending
    r.terms_.emplace(m, c);
  }
  return r;
}

FinitePoly FinitePoly::at_beta_zero() const {
  FinitePoly r(nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.at_beta_zero());
  return r;
}

// ---------- TruncatedXSeries ----------

TruncatedXSeries::TruncatedXSeries(int nvars, int degree)
    : degree_(degree), poly_(nvars) {}

TruncatedXSeries::TruncatedXSeries(FinitePoly p, int degree)
    : degree_(degree), poly_(p.truncated(degree)) {}

TruncatedXSeries TruncatedXSeries::operator+(const TruncatedXSeries& o) const {
  if (degree_ != o.degree_)
    throw std::invalid_argument("TruncatedXSeries: degree mismatch");
  return TruncatedXSeries(poly_ + o.poly_, degree_);
}

TruncatedXSeries TruncatedXSeries::operator-(const TruncatedXSeries& o) const {
  if (degree_ != o.degree_)
    throw std::invalid_argument("TruncatedXSeries: degree mismatch");
  return TruncatedXSeries(poly_ - o.poly_, degree_);
}

TruncatedXSeries TruncatedXSeries::operator*(const TruncatedXSeries& o) const {
  if (degree_ != o.degree_)
    throw std::invalid_argument("TruncatedXSeries: degree mismatch");
  return TruncatedXSeries(poly_.mul_truncated(o.poly_, degree_), degree_);
}

bool TruncatedXSeries::operator==(const TruncatedXSeries& o) const {
  return degree_ == o.degree_ && poly_ == o.poly_;
}

TruncatedXSeries TruncatedXSeries::at_beta_zero() const {
  return TruncatedXSeries(poly_.at_beta_zero(), degree_);
}

TruncatedXSeries specialize(const PSeries& a, int N) {
  if (N <= 0) throw std::invalid_argument("specialize: N must be positive");
  int D = a.degree();
  std::vector<FinitePoly> psum;  // psum[k] = x_1^k + ... + x_N^k
  psum.emplace_back(FinitePoly::constant(BetaScalar(Int(N)), N));
  for (int k = 1; k <= D; ++k) {
    FinitePoly p(N);
    for (int i = 0; i < N; ++i) {
      Monomial m(static_cast<size_t>(N), 0);
      m[static_cast<size_t>(i)] = k;
      p.add_term(m, BetaScalar(1));
    }
    psum.push_back(std::move(p));
  }
  FinitePoly acc(N);
  for (const auto& [lam, c] : a.terms()) {
    FinitePoly term = FinitePoly::constant(c, N);
    for (int part : lam.parts())
      term = term.mul_truncated(psum[static_cast<size_t>(part)], D);
    acc += term;
  }
  return TruncatedXSeries(std::move(acc), D);
}

namespace {

// Shared substitution core: x_1 = t and x_2 expanded via `expand_x2`, which
// appends (t-exponent, coefficient) pairs for x_2^e.  The t-exponent lands in
// slot 0; slot 1 is cleared.
FinitePoly substitute_first_two(
    const FinitePoly& a,
    const std::function<void(int, std::vector<std::pair<int, BetaScalar>>&)>&
        expand_x2,
    int degree_bound) {
  FinitePoly out(a.nvars());
  std::vector<std::pair<int, BetaScalar>> x2;
  for (const auto& [m, c] : a.terms()) {
    int e0 = m[0], e1 = m[1];
    x2.clear();
    expand_x2(e1, x2);
    for (const auto& [extra_t, coeff] : x2) {
      Monomial r = m;
      r[0] = e0 + extra_t;
      r[1] = 0;
      if (degree_bound >= 0 && mono_degree(r) > degree_bound) continue;
      out.add_term(r, c * coeff);
    }
  }
  return out;
}

bool t_free_up_to(const FinitePoly& a, int t_order) {
  for (const auto& [m, c] : a.terms())
    if (m[0] >= 1 && (t_order < 0 || m[0] <= t_order)) return false;
  return true;
}

}  // namespace

bool check_dual_cancellation(const FinitePoly& a) {
  if (a.nvars() < 2)
    throw std::invalid_argument("check_dual_cancellation: need at least 2 variables");
  // x_2^e = (-t-beta)^e = (-1)^e sum_j binom(e,j) t^j beta^{e-j}
  auto expand = [](int e, std::vector<std::pair<int, BetaScalar>>& out) {
    for (int j = 0; j <= e; ++j) {
      BetaScalar c(BetaPoly::monomial(binom_signed(e, j), e - j));
      if (e % 2 == 1) c = -c;
      out.emplace_back(j, c);
    }
  };
  return t_free_up_to(substitute_first_two(a, expand, -1), -1);
}

bool check_dual_cancellation(const TruncatedXSeries& a) {
  return check_dual_cancellation(a.poly());
}

bool check_kq_cancellation(const TruncatedXSeries& a) {
  return check_kq_cancellation(a, a.degree());
}

bool check_kq_cancellation(const TruncatedXSeries& a, int t_order) {
  if (a.nvars() < 2)
    throw std::invalid_argument("check_kq_cancellation: need at least 2 variables");
  if (t_order <= 0)
    throw std::invalid_argument("check_kq_cancellation: t_order must be positive");
  int bound = a.degree();
  // x_2^e = tbar^e = (-1)^e sum_j binom(-e,j) beta^j t^{e+j}
  auto expand = [&](int e, std::vector<std::pair<int, BetaScalar>>& out) {
    if (e == 0) {
      out.emplace_back(0, BetaScalar(1));
      return;
    }
    for (int j = 0; e + j <= bound; ++j) {
      Int sign = (e % 2 == 0) ? 1 : -1;
      out.emplace_back(e + j,
                       BetaScalar(BetaPoly::monomial(sign * binom_signed(-e, j), j)));
    }
  };
  return t_free_up_to(substitute_first_two(a.poly(), expand, bound), t_order);
}

// ---------- division by a linear factor in z ----------

std::vector<FinitePoly> z_coefficients(const FinitePoly& a) {
  int nv = a.nvars();
  if (nv < 1) throw std::invalid_argument("z_coefficients: no variables");
  size_t zi = static_cast<size_t>(nv) - 1;
  std::vector<FinitePoly> out;
  for (const auto& [m, c] : a.terms()) {
    int k = m[zi];
    while (static_cast<int>(out.size()) <= k) out.emplace_back(nv);
    Monomial r = m;
    r[zi] = 0;
    out[static_cast<size_t>(k)].add_term(r, c);
  }
  if (out.empty()) out.emplace_back(nv);
  return out;
}

FinitePoly from_z_coefficients(const std::vector<FinitePoly>& coeffs, int nvars) {
  FinitePoly out(nvars);
  size_t zi = static_cast<size_t>(nvars) - 1;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [m, c] : coeffs[k].terms()) {
      Monomial r = m;
      r[zi] = static_cast<int>(k);
      out.add_term(r, c);
    }
  }
  return out;
}

std::vector<FinitePoly> z_coeff_mul(const std::vector<FinitePoly>& a,
                                    const std::vector<FinitePoly>& b, int order) {
  int nv = a.empty() ? (b.empty() ? 0 : b[0].nvars()) : a[0].nvars();
  std::vector<FinitePoly> out(static_cast<size_t>(order) + 1, FinitePoly(nv));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(order); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<FinitePoly> z_coeff_invert(const std::vector<FinitePoly>& a,
                                       int order, int nvars) {
  if (a.empty() || a[0] != FinitePoly::constant(BetaScalar(1), nvars))
    throw std::invalid_argument("z_coeff_invert: constant coefficient must be 1");
  std::vector<FinitePoly> out(static_cast<size_t>(order) + 1, FinitePoly(nvars));
  out[0] = FinitePoly::constant(BetaScalar(1), nvars);
  for (int n = 1; n <= order; ++n) {
    FinitePoly acc(nvars);
    for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k)
      acc += a[static_cast<size_t>(k)] * out[static_cast<size_t>(n - k)];
    out[static_cast<size_t>(n)] = -acc;
  }
  return out;
}

FinitePoly divide_out_linear(const FinitePoly& a, LinearRoot root) {
  auto az = z_coefficients(a);
  int nv = a.nvars();
  size_t m = az.size();
  if (m < 2) {
    if (a.is_zero()) return a;
    throw std::logic_error("divide_out_linear: polynomial is constant in z");
  }

  if (root == LinearRoot::minus_beta) {
    // Check vanishing at z = -beta, then divide by the monic factor (z+beta).
    FinitePoly eval(nv);
    BetaScalar pw(1);
    BetaScalar mb = -BetaScalar::beta_pow(1);
    for (size_t k = 0; k < m; ++k) {
      eval += az[k] * pw;
      pw *= mb;
    }
    if (!eval.is_zero())
      throw std::logic_error("divide_out_linear: input does not vanish at z = -beta");
    std::vector<FinitePoly> q(m - 1, FinitePoly(nv));
    q[m - 2] = az[m - 1];
    BetaScalar beta = BetaScalar::beta_pow(1);
    for (int k = static_cast<int>(m) - 2; k >= 1; --k)
      q[static_cast<size_t>(k - 1)] =
          az[static_cast<size_t>(k)] - q[static_cast<size_t>(k)] * beta;
    if (az[0] - q[0] * beta != FinitePoly(nv))
      throw std::logic_error("divide_out_linear: nonzero remainder");
    return from_z_coefficients(q, nv);
  }

  // z = -2/beta: divide by (2 + beta z) over Laurent coefficients; the final
  // conversion back enforces the Z[beta] membership the intersection
  // Z[beta^{+-1}] n Z[beta,1/2] guarantees.
  using LMap = std::map<Monomial, LaurentBetaPoly, MonomialOrder>;
  auto to_lmap = [&](const FinitePoly& p) {
    LMap r;
    for (const auto& [mn, c] : p.terms()) r.emplace(mn, c.to_laurent());
    return r;
  };
  std::vector<LMap> lz;
  lz.reserve(m);
  for (const auto& p : az) lz.push_back(to_lmap(p));

  auto sub_scaled = [](LMap& dst, const LMap& src, const LaurentBetaPoly& s) {
    for (const auto& [mn, c] : src) {
      auto it = dst.find(mn);
      LaurentBetaPoly v = (it == dst.end() ? LaurentBetaPoly() : it->second) - c * s;
      if (v.is_zero()) {
        if (it != dst.end()) dst.erase(it);
      } else if (it == dst.end()) {
        dst.emplace(mn, v);
      } else {
        it->second = v;
      }
    }
  };
  auto scale = [](const LMap& src, const LaurentBetaPoly& s) {
    LMap r;
    for (const auto& [mn, c] : src) {
      LaurentBetaPoly v = c * s;
      if (!v.is_zero()) r.emplace(mn, v);
    }
    return r;
  };

  LaurentBetaPoly inv_beta = LaurentBetaPoly::monomial(1, -1);
  LaurentBetaPoly two{Int(2)};
  std::vector<LMap> q(m - 1);
  q[m - 2] = scale(lz[m - 1], inv_beta);
  for (int k = static_cast<int>(m) - 2; k >= 1; --k) {
    LMap num = lz[static_cast<size_t>(k)];
    sub_scaled(num, q[static_cast<size_t>(k)], two);
    q[static_cast<size_t>(k - 1)] = scale(num, inv_beta);
  }
  LMap rem = lz[0];
  sub_scaled(rem, q[0], two);
  if (!rem.empty())
    throw std::logic_error("divide_out_linear: input does not vanish at z = -2/beta");

  std::vector<FinitePoly> qpoly;
  qpoly.reserve(q.size());
  for (const auto& layer : q) {
    FinitePoly p(nv);
    for (const auto& [mn, c] : layer)
      p.add_term(mn, BetaScalar(c.to_beta_poly()));  // throws on beta^{-1}
    qpoly.push_back(std::move(p));
  }
  return from_z_coefficients(qpoly, nv);
}

}  // namespace kq
