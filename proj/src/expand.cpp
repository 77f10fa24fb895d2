#include "kq/expand.hpp"

#include <algorithm>
#include <vector>

namespace kq {

namespace {

using Coords = std::map<Partition, BetaScalar>;

void coords_add(Coords& dst, const Partition& key, const BetaScalar& c) {
  if (c.is_zero()) return;
  auto it = dst.find(key);
  if (it == dst.end()) {
    dst.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

// Product in the free commutative ring on generators indexed by parts,
// truncated at weight bound D (D < 0 = exact).
Coords coords_mul(const Coords& a, const Coords& b, int D) {
  Coords r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      if (D >= 0 && ka.weight() + kb.weight() > D) continue;
      coords_add(r, ka.concat(kb), ca * cb);
    }
  return r;
}

// binom(-n,k) * (-beta/2)^k
BetaScalar inverse_subst_coeff(int n, int k) {
  Int num = binom_signed(-n, k);
  if (k % 2 == 1) num = -num;
  Int den = 1;
  for (int i = 0; i < k; ++i) den *= 2;
  return BetaScalar(BetaPoly::monomial(num, k), BetaPoly(den));
}

}  // namespace

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::pG_odd: return "pG_odd";
    case Basis::qG_odd: return "qG_odd";
    case Basis::ovqG_odd: return "ovqG_odd";
    case Basis::qG_strict: return "qG_strict";
    case Basis::ovqG_strict: return "ovqG_strict";
    case Basis::pg_odd: return "pg_odd";
    case Basis::qg_odd: return "qg_odd";
    case Basis::ovqg_odd: return "ovqg_odd";
    case Basis::qg_strict: return "qg_strict";
    case Basis::ovqg_strict: return "ovqg_strict";
    case Basis::GQ_odd: return "GQ_odd";
  }
  throw std::logic_error("basis_name");
}

Basis basis_from_name(const std::string& name) {
  for (Basis b : {Basis::pG_odd, Basis::qG_odd, Basis::ovqG_odd,
                  Basis::qG_strict, Basis::ovqG_strict, Basis::pg_odd,
                  Basis::qg_odd, Basis::ovqg_odd, Basis::qg_strict,
                  Basis::ovqg_strict, Basis::GQ_odd})
    if (basis_name(b) == name) return b;
  throw std::invalid_argument("unknown basis: " + name);
}

bool basis_is_g_side(Basis b) {
  switch (b) {
    case Basis::pg_odd:
    case Basis::qg_odd:
    case Basis::ovqg_odd:
    case Basis::qg_strict:
    case Basis::ovqg_strict:
      return true;
    default:
      return false;
  }
}

PartitionClass basis_class(Basis b) {
  switch (b) {
    case Basis::qG_strict:
    case Basis::ovqG_strict:
    case Basis::qg_strict:
    case Basis::ovqg_strict:
      return PartitionClass::strict;
    default:
      return PartitionClass::odd;
  }
}

PSeries basis_element(Basis b, const Partition& mu, int D) {
  switch (b) {
    case Basis::pG_odd:
      return p_lambda_G(mu, D);
    case Basis::qG_odd:
    case Basis::qG_strict:
      return q_lambda_G(mu, D);
    case Basis::ovqG_odd:
    case Basis::ovqG_strict: {
      PSeries r = PSeries::constant(BetaScalar(1), D);
      if (mu.empty()) return r;
      ZSeries s = ovq_beta_G_series(mu.part(0), D);
      for (int part : mu.parts()) r = r * s.at(part);
      return r;
    }
    case Basis::pg_odd: {
      PSeries r = p_lambda_g(mu);
      return D >= r.degree() ? r.with_degree_bound(D) : r.truncated(D);
    }
    case Basis::qg_odd:
    case Basis::qg_strict: {
      PSeries r = q_lambda_g(mu);
      return D >= r.degree() ? r.with_degree_bound(D) : r.truncated(D);
    }
    case Basis::ovqg_odd:
    case Basis::ovqg_strict: {
      PSeries r = PSeries::constant(BetaScalar(1), mu.weight());
      for (int part : mu.parts())
        r = r * ovq_beta_g(part).with_degree_bound(mu.weight());
      return D >= r.degree() ? r.with_degree_bound(D) : r.truncated(D);
    }
    case Basis::GQ_odd: {
      PSeries r = PSeries::constant(BetaScalar(1), D);
      for (int part : mu.parts()) r = r * GQ(part, D);
      return r;
    }
  }
  throw std::logic_error("basis_element");
}

PSeries recombine(const Expansion& e) {
  PSeries r(e.degree);
  for (const auto& [mu, c] : e.coords)
    r += basis_element(e.basis, mu, e.degree) * c;
  return r;
}

PGCoords to_pG_coords(const PSeries& a, int D) {
  if (D > a.degree())
    throw std::invalid_argument(
        "to_pG_coords: input truncated below requested degree");
  // p_n = sum_k binom(-n,k) (-beta/2)^k P_{n+k}, truncated at D
  std::vector<Coords> rewrite(static_cast<size_t>(D) + 1);
  for (int n = 1; n <= D; ++n)
    for (int k = 0; n + k <= D; ++k)
      coords_add(rewrite[static_cast<size_t>(n)], Partition({n + k}),
                 inverse_subst_coeff(n, k));

  Coords total;
  for (const auto& [lam, c] : a.terms()) {
    if (lam.weight() > D) break;
    Coords acc;
    acc.emplace(Partition(), BetaScalar(1));
    for (int part : lam.parts())
      acc = coords_mul(acc, rewrite[static_cast<size_t>(part)], D);
    for (const auto& [key, v] : acc) coords_add(total, key, v * c);
  }

  PGCoords out;
  out.odd.basis = Basis::pG_odd;
  out.odd.degree = D;
  for (const auto& [key, v] : total) {
    if (key.all_odd())
      out.odd.coords.emplace(key, v);
    else
      out.residual.emplace(key, v);
  }
  return out;
}

std::map<Partition, BetaScalar> to_pg_coords(const PSeries& a) {
  int top = 0;
  for (const auto& [lam, c] : a.terms()) top = std::max(top, lam.weight());
  // p_n in the P^{[beta]} generators, by triangular inversion of
  // p_n^{[beta]} = sum_k binom(n,k)(beta/2)^k p_{n-k}.
  std::vector<Coords> expr(static_cast<size_t>(top) + 1);
  for (int n = 1; n <= top; ++n) {
    Coords e;
    e.emplace(Partition({n}), BetaScalar(1));
    for (int k = 1; k <= n - 1; ++k) {
      Int den = 1;
      for (int i = 0; i < k; ++i) den *= 2;
      BetaScalar c(BetaPoly::monomial(binom_signed(n, k), k), BetaPoly(den));
      for (const auto& [key, v] : expr[static_cast<size_t>(n - k)])
        coords_add(e, key, -(v * c));
    }
    expr[static_cast<size_t>(n)] = std::move(e);
  }
  Coords total;
  for (const auto& [lam, c] : a.terms()) {
    Coords acc;
    acc.emplace(Partition(), BetaScalar(1));
    for (int part : lam.parts())
      acc = coords_mul(acc, expr[static_cast<size_t>(part)], -1);
    for (const auto& [key, v] : acc) coords_add(total, key, v * c);
  }
  return total;
}

namespace {

// Exact solve of the (possibly overdetermined) weight-block system.
// rows: one equation per partition of the weight; cols: unknowns.
std::vector<BetaScalar> solve_block(std::vector<std::vector<BetaScalar>> A,
                                    std::vector<BetaScalar> b, int weight) {
  size_t rows = A.size();
  size_t cols = rows == 0 ? 0 : A[0].size();
  std::vector<size_t> pivot_col_of_row;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && A[p][c].is_zero()) ++p;
    if (p == rows) {
      throw membership_error("singular degree block at weight " +
                             std::to_string(weight));
    }
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    BetaScalar inv = A[r][c].inverse();
    for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      BetaScalar f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!b[i].is_zero())
      throw membership_error("inconsistent degree block at weight " +
                             std::to_string(weight) +
                             " (membership or truncation-depth failure)");
  std::vector<BetaScalar> u(cols);
  for (size_t i = 0; i < r; ++i) u[pivot_col_of_row[i]] = b[i];
  return u;
}

}  // namespace

Expansion expand_in_basis(const PSeries& a, Basis basis, int D,
                          UnknownOrder order) {
  const bool g_side = basis_is_g_side(basis);
  const PartitionClass cls = basis_class(basis);

  if (g_side) {
    auto dual = to_pg_coords(a);
    for (const auto& [key, v] : dual)
      if (!key.all_odd())
        throw membership_error(
            "dual membership certificate failed: p^[beta]-coordinate on " +
            key.str() + " is " + v.str());
  } else {
    if (a.degree() < D)
      throw std::invalid_argument(
          "expand_in_basis: input truncated below requested degree");
    auto pg = to_pG_coords(a, D);
    if (!pg.member()) {
      const auto& [key, v] = *pg.residual.begin();
      throw membership_error("membership certificate failed: residual " +
                             key.str() + " -> " + v.str());
    }
  }

  int wmax = D;
  if (g_side) {
    wmax = 0;
    for (const auto& [lam, c] : a.terms()) wmax = std::max(wmax, lam.weight());
  }

  Expansion out;
  out.basis = basis;
  out.degree = wmax;

  // Basis elements, grouped by weight.
  std::map<int, std::vector<std::pair<Partition, PSeries>>> elements;
  for (int w = 0; w <= wmax; ++w) {
    auto parts = enumerate_partitions(w, cls);
    if (order == UnknownOrder::reversed)
      std::reverse(parts.begin(), parts.end());
    for (const auto& mu : parts)
      elements[w].emplace_back(mu, basis_element(basis, mu, out.degree));
  }

  PSeries residual = a.degree() >= out.degree ? a.truncated(out.degree)
                                              : a.with_degree_bound(out.degree);
  std::vector<int> weights;
  for (int w = 0; w <= wmax; ++w) weights.push_back(w);
  if (g_side) std::reverse(weights.begin(), weights.end());  // top weight first

  for (int w : weights) {
    const auto& els = elements[w];
    if (els.empty()) continue;
    auto all = enumerate_partitions(w, PartitionClass::all);
    std::vector<std::vector<BetaScalar>> A(all.size(),
                                           std::vector<BetaScalar>(els.size()));
    std::vector<BetaScalar> b(all.size());
    PSeries part = residual.graded_part(w);
    for (size_t i = 0; i < all.size(); ++i) {
      b[i] = part.coeff(all[i]);
      for (size_t j = 0; j < els.size(); ++j)
        A[i][j] = els[j].second.coeff(all[i]);
    }
    auto u = solve_block(std::move(A), std::move(b), w);
    for (size_t j = 0; j < els.size(); ++j) {
      if (u[j].is_zero()) continue;
      out.coords.emplace(els[j].first, u[j]);
      residual -= els[j].second * u[j];
    }
  }

  if (!residual.is_zero())
    throw membership_error("expansion left a nonzero residual (degree " +
                           std::to_string(residual.min_weight()) + ")");
  return out;
}

Expansion expand_GQ_basis(const PSeries& a, int D) {
  return expand_in_basis(a, Basis::GQ_odd, D);
}

// ---------- formal gp polynomials ----------

FormalGPPoly FormalGPPoly::variable(int index) {
  if (index < 1) throw std::invalid_argument("FormalGPPoly: index must be positive");
  FormalGPPoly r;
  r.terms_.emplace(Partition({index}), LaurentBetaPoly(Int(1)));
  return r;
}

FormalGPPoly FormalGPPoly::constant(const LaurentBetaPoly& c) {
  FormalGPPoly r;
  if (!c.is_zero()) r.terms_.emplace(Partition(), c);
  return r;
}

LaurentBetaPoly FormalGPPoly::coeff(const Partition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? LaurentBetaPoly() : it->second;
}

void FormalGPPoly::add_term(const Partition& key, const LaurentBetaPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalGPPoly FormalGPPoly::operator-() const {
  FormalGPPoly r;
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
  return r;
}

FormalGPPoly FormalGPPoly::operator+(const FormalGPPoly& o) const {
  FormalGPPoly r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(key, c);
  return r;
}

FormalGPPoly FormalGPPoly::operator-(const FormalGPPoly& o) const {
  return *this + (-o);
}

FormalGPPoly FormalGPPoly::operator*(const FormalGPPoly& o) const {
  FormalGPPoly r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) r.add_term(ka.concat(kb), ca * cb);
  return r;
}

FormalGPPoly FormalGPPoly::operator*(const LaurentBetaPoly& c) const {
  FormalGPPoly r;
  if (c.is_zero()) return r;
  for (const auto& [key, v] : terms_) r.add_term(key, v * c);
  return r;
}

FormalGPPoly FormalGPPoly::substituted(int index, const FormalGPPoly& value) const {
  FormalGPPoly r;
  for (const auto& [key, c] : terms_) {
    int mult = key.multiplicity(index);
    if (mult == 0) {
      r.add_term(key, c);
      continue;
    }
    std::vector<int> rest;
    for (int p : key.parts())
      if (p != index) rest.push_back(p);
    FormalGPPoly term;
    term.add_term(Partition(std::move(rest)), c);
    for (int i = 0; i < mult; ++i) term = term * value;
    r += term;
  }
  return r;
}

bool FormalGPPoly::depends_on(int index) const {
  for (const auto& [key, c] : terms_)
    if (key.multiplicity(index) > 0) return true;
  return false;
}

bool FormalGPPoly::coefficients_in_z_beta() const {
  for (const auto& [key, c] : terms_)
    if (!c.is_beta_nonneg()) return false;
  return true;
}

std::vector<FormalGPPoly> formal_series_mul(const std::vector<FormalGPPoly>& a,
                                            const std::vector<FormalGPPoly>& b,
                                            int order) {
  std::vector<FormalGPPoly> r(static_cast<size_t>(order) + 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(order); ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

std::vector<FormalGPPoly> formal_geometric(const std::vector<FormalGPPoly>& f,
                                           bool alternating, int order) {
  if (!f.empty() && !f[0].is_zero())
    throw std::invalid_argument("formal_geometric: constant term must vanish");
  std::vector<FormalGPPoly> acc(static_cast<size_t>(order) + 1);
  std::vector<FormalGPPoly> pw(f.begin(),
                               f.begin() + std::min(f.size(), static_cast<size_t>(order) + 1));
  pw.resize(static_cast<size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) {
    LaurentBetaPoly sign{Int(alternating && k % 2 == 0 ? -1 : 1)};
    for (int j = 0; j <= order; ++j) acc[static_cast<size_t>(j)] += pw[static_cast<size_t>(j)] * sign;
    if (k < order) pw = formal_series_mul(pw, f, order);
  }
  return acc;
}

std::map<int, FormalGPPoly> keven_reduce(int M) {
  if (M < 1) throw std::invalid_argument("keven_reduce: M must be positive");
  // F = sum_{n>=1} c_n z^{n+1}; position m holds [z^m].
  std::vector<FormalGPPoly> G(static_cast<size_t>(M) + 2);
  for (int n = 1; n <= M; ++n)
    G[static_cast<size_t>(n) + 1] = FormalGPPoly::variable(n);

  std::map<int, FormalGPPoly> out;
  LaurentBetaPoly beta = LaurentBetaPoly::monomial(1, 1);
  for (int k = 1; 2 * k <= M; ++k) {
    FormalGPPoly alpha = G[static_cast<size_t>(2 * k)];
    // K-evenness forces [z^{2k+1}] of G - alpha*(z+zbar)^k/beta^k to vanish:
    FormalGPPoly full = G[static_cast<size_t>(2 * k) + 1] +
                        alpha * (beta * LaurentBetaPoly(Int(k)));
    Partition ckey({2 * k});
    if (full.coeff(ckey) != LaurentBetaPoly(Int(1)))
      throw std::logic_error("keven_reduce: unexpected pivot coefficient");
    FormalGPPoly rest = full;
    rest.add_term(ckey, LaurentBetaPoly(Int(-1)));
    out[2 * k] = -rest;

    // Subtract alpha * sum_j binom(-k,j) beta^j z^{2k+j} and impose the
    // derived relation (positions 2k and 2k+1 become zero).
    G[static_cast<size_t>(2 * k)] = FormalGPPoly();
    G[static_cast<size_t>(2 * k) + 1] = FormalGPPoly();
    for (int j = 2; 2 * k + j <= M + 1; ++j) {
      LaurentBetaPoly c = LaurentBetaPoly::monomial(binom_signed(-k, j), j);
      G[static_cast<size_t>(2 * k + j)] -= alpha * c;
    }
  }
  for (const auto& [idx, p] : out) {
    if (!p.coefficients_in_z_beta())
      throw std::logic_error("keven_reduce: beta^{-1} survives in c_" +
                             std::to_string(idx));
    for (const auto& [key, c] : p.terms())
      if (!key.all_odd())
        throw std::logic_error("keven_reduce: even-index c survives in c_" +
                               std::to_string(idx));
  }
  return out;
}

std::map<int, FormalGPPoly> gp_even_to_odd(int n_max) {
  if (n_max < 1) throw std::invalid_argument("gp_even_to_odd: n_max must be positive");
  // f = sum gp_n z^n with formal generators; phi = f/(1+f).
  std::vector<FormalGPPoly> f(static_cast<size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n)
    f[static_cast<size_t>(n)] = FormalGPPoly::variable(n);
  auto phi = formal_geometric(f, /*alternating=*/true, n_max);
  auto kev = keven_reduce(n_max);

  std::map<int, FormalGPPoly> even_gp;
  std::map<int, FormalGPPoly> odd_c;
  for (int n = 1; n <= n_max; ++n) {
    FormalGPPoly e = phi[static_cast<size_t>(n)];
    for (const auto& [idx, formula] : even_gp)
      if (e.depends_on(idx)) e = e.substituted(idx, formula);
    if (n % 2 == 1) {
      odd_c[n] = e;
      continue;
    }
    FormalGPPoly v = kev.at(n);
    for (const auto& [idx, formula] : odd_c)
      if (v.depends_on(idx)) v = v.substituted(idx, formula);
    Partition key({n});
    if (e.coeff(key) != LaurentBetaPoly(Int(1)))
      throw std::logic_error("gp_even_to_odd: unexpected pivot coefficient");
    FormalGPPoly rest = e;
    rest.add_term(key, LaurentBetaPoly(Int(-1)));
    even_gp[n] = v - rest;
  }
  for (const auto& [idx, p] : even_gp)
    if (!p.coefficients_in_z_beta())
      throw std::logic_error("gp_even_to_odd: gp_" + std::to_string(idx) +
                             " has a coefficient outside Z[beta]");
  return even_gp;
}

PSeries eval_formal_gp(const FormalGPPoly& f, int D) {
  PSeries r(D);
  std::map<int, PSeries> cache;
  for (const auto& [key, c] : f.terms()) {
    PSeries term = PSeries::constant(c.to_scalar(), D);
    for (int idx : key.parts()) {
      auto it = cache.find(idx);
      if (it == cache.end())
        it = cache.emplace(idx, gp(idx).with_degree_bound(D)).first;
      term = term * it->second;
    }
    r += term;
  }
  return r;
}

}  // namespace kq
