#include "kq/kqfam.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace kq {

namespace {

const std::set<std::string> kTags = {"pG", "pg", "qG", "qg",
                                     "ovqG", "ovqg", "GQ", "gp"};

// Memo caches for the q-generating series keyed by (order, degree).  The
// constructors stay pure; the caches hold immutable snapshots behind a lock.
std::mutex cache_mutex;

ZSeries qG_series_uncached(int n_max, int D);
ZSeries qg_series_uncached(int n_max);

ZSeries qG_series_cached(int n_max, int D) {
  static std::map<std::pair<int, int>, ZSeries> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(n_max, D);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, qG_series_uncached(n_max, D)).first;
  return it->second;
}

ZSeries ovqG_series_cached(int n_max, int D) {
  static std::map<std::pair<int, int>, ZSeries> cache;
  ZSeries q = qG_series_cached(n_max, D);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(n_max, D);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, zseries_invert(q)).first;
  return it->second;
}

ZSeries qg_series_cached(int n_max) {
  static std::map<int, ZSeries> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n_max);
  if (it == cache.end()) it = cache.emplace(n_max, qg_series_uncached(n_max)).first;
  return it->second;
}

// Inverse of sum_l (-beta)^l q_l at degree D, shared by every GQ index.
PSeries gq_denominator_inverse(int D) {
  static std::map<int, PSeries> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(D);
    if (it != cache.end()) return it->second;
  }
  ZSeries q = qG_series_cached(D, D);
  PSeries denom(D);
  for (int l = 0; l <= D; ++l)
    denom += q.at(l) * BetaScalar(BetaPoly::monomial(l % 2 ? -1 : 1, l));
  PSeries inv = pseries_invert(denom);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(D, std::move(inv)).first->second;
}

// (beta/2)^k as an exact scalar.
BetaScalar beta_over_two_pow(int k) {
  Int den = 1;
  for (int i = 0; i < k; ++i) den *= 2;
  return BetaScalar(BetaPoly::monomial(1, k), BetaPoly(den));
}

BetaScalar beta_pow_signed(int k, bool negate_base) {
  Int c = (negate_base && k % 2 == 1) ? -1 : 1;
  return BetaScalar(BetaPoly::monomial(c, k));
}

// p_k(xbar) = (-1)^k sum_j binom(-k,j) beta^j p_{k+j}, truncated at D.
PSeries power_sum_bar(int k, int D) {
  PSeries r(D);
  for (int j = 0; k + j <= D; ++j) {
    Int c = binom_signed(-k, j);
    if (k % 2 == 1) c = -c;
    r.add_term(Partition({k + j}), BetaScalar(BetaPoly::monomial(c, j)));
  }
  return r;
}

}  // namespace

bool is_valid_family_tag(const std::string& tag) { return kTags.count(tag) > 0; }

bool is_valid_family_id(const FamilyId& id) {
  if (!is_valid_family_tag(id.tag)) return false;
  if (id.tag == "GQ") return true;
  return id.n >= 1;
}

PSeries p_beta_G(int n, int D, bool allow_even) {
  if (n < 1) throw std::invalid_argument("p_beta_G: index must be positive");
  if (n % 2 == 0 && !allow_even)
    throw std::invalid_argument(
        "p_beta_G: even index is outside the cancellation algebra "
        "(pass allow_even to build it anyway)");
  PSeries r(D);
  for (int k = 0; n + k <= D; ++k)
    r.add_term(Partition({n + k}),
               beta_over_two_pow(k) * BetaScalar(binom_signed(-n, k)));
  return r;
}

PSeries p_beta_g(int n) {
  if (n < 1) throw std::invalid_argument("p_beta_g: index must be positive");
  PSeries r(n);
  for (int k = 0; k <= n - 1; ++k)
    r.add_term(Partition({n - k}),
               beta_over_two_pow(k) * BetaScalar(binom_signed(n, k)));
  return r;
}

namespace {

ZSeries qG_series_uncached(int n_max, int D) {
  ZSeries log_q(n_max, D);
  for (int k = 1; k <= n_max; ++k) {
    PSeries t(D);
    if (k <= D) t = PSeries::power_sum(k, D) - power_sum_bar(k, D);
    log_q.set(k, t * BetaScalar::rational(1, k));
  }
  return zseries_exp(log_q);
}

}  // namespace

ZSeries q_beta_G_series(int n_max, int D) { return qG_series_cached(n_max, D); }

PSeries q_beta_G(int n, int D) {
  if (n < 0) throw std::invalid_argument("q_beta_G: negative index");
  return q_beta_G_series(n, D).at(n);
}

ZSeries ovq_beta_G_series(int n_max, int D) {
  return ovqG_series_cached(n_max, D);
}

PSeries ovq_beta_G(int n, int D) {
  if (n < 0) throw std::invalid_argument("ovq_beta_G: negative index");
  return ovq_beta_G_series(n, D).at(n);
}

namespace {

ZSeries qg_series_uncached(int n_max) {
  int D = n_max;
  ZSeries log_q(n_max, D);
  for (int k = 1; k <= n_max; ++k) {
    PSeries pk = PSeries::power_sum(k, D) * BetaScalar::rational(1, k);
    log_q.set(k, log_q.at(k) + pk);
    // subtract p_k zbar^k / k
    for (int j = 0; k + j <= n_max; ++j) {
      Int c = binom_signed(-k, j);
      if (k % 2 == 1) c = -c;
      BetaScalar s(BetaPoly::monomial(c, j));
      log_q.set(k + j, log_q.at(k + j) - pk * s);
    }
  }
  return zseries_exp(log_q);
}

}  // namespace

ZSeries q_beta_g_series(int n_max) { return qg_series_cached(n_max); }

PSeries q_beta_g(int n) {
  if (n < 0) throw std::invalid_argument("q_beta_g: negative index");
  return q_beta_g_series(n).at(n).truncated(n);
}

PSeries ovq_beta_g(int n) {
  if (n < 1) throw std::invalid_argument("ovq_beta_g: index must be positive");
  PSeries r(n);
  for (int l = 0; l <= n - 1; ++l) {
    BetaScalar c(BetaPoly::monomial(binom_signed(n - 1, l), l));
    if (n % 2 == 1) c = -c;
    r += q_beta_g(n - l).with_degree_bound(n) * c;
  }
  return r;
}

PSeries q_gen_denominator(int D) {
  ZSeries q = q_beta_G_series(D, D);
  PSeries r(D);
  for (int l = 0; l <= D; ++l) r += q.at(l) * beta_pow_signed(l, true);
  return r;
}

PSeries GQ(int n, int D) {
  if (n <= 0) return PSeries::constant(beta_pow_signed(-n, true), D);
  ZSeries q = q_beta_G_series(D, D);
  PSeries numer(D);
  for (int j = 0; n + j <= D; ++j)
    numer += q.at(n + j) * beta_pow_signed(j, true);
  return numer * gq_denominator_inverse(D);
}

namespace {

FinitePoly drop_last_var(const FinitePoly& a) {
  FinitePoly r(a.nvars() - 1);
  for (const auto& [m, c] : a.terms()) {
    if (m.back() != 0)
      throw std::logic_error("drop_last_var: z-exponent survives");
    Monomial t(m.begin(), m.end() - 1);
    r.add_term(t, c);
  }
  return r;
}

}  // namespace

FinitePoly GQ_finite(int n, int N) {
  if (n < 1) throw std::invalid_argument("GQ_finite: index must be positive");
  if (N < 1) throw std::invalid_argument("GQ_finite: need at least one variable");
  int nv = N + 1;  // z is the last slot
  BetaScalar beta = BetaScalar::beta_pow(1);
  FinitePoly one = FinitePoly::constant(BetaScalar(1), nv);
  FinitePoly z = FinitePoly::variable(N, nv);
  FinitePoly A = one, B = one, C = one;
  for (int i = 0; i < N; ++i) {
    FinitePoly xi = FinitePoly::variable(i, nv);
    A = A * (one + xi * z + xi * beta);
    B = B * (one + xi * beta);
    C = C * (one - xi * z);
  }
  FinitePoly numer = A * B - C;
  FinitePoly quotient = divide_out_linear(numer, LinearRoot::minus_beta);

  // [z^n] of z * quotient * C^{-1}  =  [z^{n-1}] of quotient * C^{-1}
  auto qc = z_coefficients(quotient);
  auto cinv = z_coeff_invert(z_coefficients(C), n - 1, nv);
  auto series = z_coeff_mul(qc, cinv, n - 1);
  FinitePoly result = drop_last_var(series[static_cast<size_t>(n - 1)]);
  for (const auto& [m, c] : result.terms())
    if (!c.is_in_z_beta())
      throw std::logic_error("GQ_finite: coefficient outside Z[beta]");
  return result;
}

PSeries gp(int n) {
  if (n < 1) throw std::invalid_argument("gp: index must be positive");
  PSeries r(n);
  for (int i = 0; i <= n - 1; ++i) {
    BetaScalar c = beta_over_two_pow(i);
    if (i % 2 == 1) c = -c;
    r += q_beta_g(n - i).with_degree_bound(n) * c;
  }
  return r * BetaScalar::rational(1, 2);
}

PSeries p_lambda_G(const Partition& lambda, int D) {
  PSeries r = PSeries::constant(BetaScalar(1), D);
  for (int part : lambda.parts()) r = r * p_beta_G(part, D);
  return r;
}

PSeries p_lambda_g(const Partition& lambda) {
  int d = std::max(lambda.weight(), 0);
  PSeries r = PSeries::constant(BetaScalar(1), d);
  for (int part : lambda.parts()) r = r * p_beta_g(part).with_degree_bound(d);
  return r;
}

PSeries q_lambda_G(const Partition& lambda, int D) {
  PSeries r = PSeries::constant(BetaScalar(1), D);
  if (lambda.empty()) return r;
  ZSeries q = q_beta_G_series(lambda.part(0), D);
  for (int part : lambda.parts()) r = r * q.at(part);
  return r;
}

PSeries q_lambda_g(const Partition& lambda) {
  int d = lambda.weight();
  PSeries r = PSeries::constant(BetaScalar(1), d);
  for (int part : lambda.parts()) r = r * q_beta_g(part).with_degree_bound(d);
  return r;
}

PSeries family_element(const FamilyId& id, int D) {
  if (!is_valid_family_id(id))
    throw std::invalid_argument("unknown family element " + id.tag +
                                std::to_string(id.n));
  if (id.tag == "pG") return p_beta_G(id.n, D);
  if (id.tag == "pg") return p_beta_g(id.n);
  if (id.tag == "qG") return q_beta_G(id.n, D);
  if (id.tag == "qg") return q_beta_g(id.n);
  if (id.tag == "ovqG") return ovq_beta_G(id.n, D);
  if (id.tag == "ovqg") return ovq_beta_g(id.n);
  if (id.tag == "GQ") return GQ(id.n, D);
  return gp(id.n);
}

}  // namespace kq
