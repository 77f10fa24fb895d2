#include "kq/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace kq {

namespace {

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

Int binom_signed(long long n, long long k) {
  if (k < 0) return 0;
  if (n < 0) {
    Int v = binom_signed(-n + k - 1, k);
    return (k % 2 == 0) ? v : -v;
  }
  if (k > n) return 0;
  Int num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= Int(n - i);
    den *= Int(i + 1);
  }
  return num / den;
}

// ---------- BetaPoly ----------

BetaPoly::BetaPoly(const Int& c) {
  if (c != 0) coeffs_.push_back(c);
}

BetaPoly::BetaPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

BetaPoly BetaPoly::monomial(const Int& c, int k) {
  BetaPoly p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<size_t>(k) + 1, Int(0));
    p.coeffs_[static_cast<size_t>(k)] = c;
  }
  return p;
}

void BetaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool BetaPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Int BetaPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

Int BetaPoly::leading_coeff() const {
  return coeffs_.empty() ? Int(0) : coeffs_.back();
}

BetaPoly BetaPoly::operator-() const {
  BetaPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BetaPoly BetaPoly::operator+(const BetaPoly& o) const {
  BetaPoly r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  r.trim();
  return r;
}

BetaPoly BetaPoly::operator-(const BetaPoly& o) const { return *this + (-o); }

BetaPoly BetaPoly::operator*(const BetaPoly& o) const {
  if (is_zero() || o.is_zero()) return BetaPoly();
  BetaPoly r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  r.trim();
  return r;
}

BetaPoly BetaPoly::pow(int k) const {
  BetaPoly r{Int(1)};
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Int BetaPoly::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

BetaPoly BetaPoly::primitive_part() const {
  if (is_zero()) return *this;
  Int g = content();
  BetaPoly r = *this;
  for (auto& c : r.coeffs_) c /= g;
  return r;
}

BetaPoly BetaPoly::divexact(const BetaPoly& d) const {
  if (d.is_zero()) throw division_by_zero();
  if (is_zero()) return BetaPoly();
  if (degree() < d.degree())
    throw std::logic_error("BetaPoly::divexact: not divisible");
  std::vector<Int> rem = coeffs_;
  std::vector<Int> quo(coeffs_.size() - d.coeffs_.size() + 1, Int(0));
  const Int& lead = d.coeffs_.back();
  for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
    Int top = rem[static_cast<size_t>(i) + d.coeffs_.size() - 1];
    if (top % lead != 0)
      throw std::logic_error("BetaPoly::divexact: not divisible");
    Int q = top / lead;
    quo[static_cast<size_t>(i)] = q;
    if (q != 0)
      for (size_t j = 0; j < d.coeffs_.size(); ++j)
        rem[static_cast<size_t>(i) + j] -= q * d.coeffs_[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::logic_error("BetaPoly::divexact: not divisible");
  return BetaPoly(std::move(quo));
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b assumed handled by caller):
// repeatedly r := lead(b)*r - top(r)*b*x^i, which stays in Z[beta].
BetaPoly pseudo_rem(const BetaPoly& a, const BetaPoly& b) {
  std::vector<Int> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const Int lead = b.leading_coeff();
  const int db = b.degree();
  for (int i = a.degree() - db; i >= 0; --i) {
    Int top = rem[static_cast<size_t>(i + db)];
    for (auto& c : rem) c *= lead;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(i + j)] -= top * bc[static_cast<size_t>(j)];
  }
  return BetaPoly(std::move(rem));
}

}  // namespace

BetaPoly poly_gcd(BetaPoly a, BetaPoly b) {
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) {
    if (a.is_zero()) return a;
    BetaPoly r = a.primitive_part();
    return r.leading_coeff() < 0 ? -r : r;
  }
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    BetaPoly r = pseudo_rem(a, b).primitive_part();
    a = b;
    b = r;
  }
  return a.leading_coeff() < 0 ? -a : a;
}

std::string BetaPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Int c = coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "b";
      if (k != 1) out << "^" << k;
    }
  }
  return out.str();
}

// ---------- LaurentBetaPoly ----------

LaurentBetaPoly::LaurentBetaPoly(const Int& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentBetaPoly::LaurentBetaPoly(const BetaPoly& p) : coeffs_(p.coeffs()) {
  trim();
}

LaurentBetaPoly LaurentBetaPoly::monomial(const Int& c, int k) {
  LaurentBetaPoly p;
  if (c != 0) {
    p.min_exp_ = k;
    p.coeffs_.push_back(c);
  }
  return p;
}

void LaurentBetaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  size_t lead0 = 0;
  while (lead0 < coeffs_.size() && coeffs_[lead0] == 0) ++lead0;
  if (lead0 > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead0));
    min_exp_ += static_cast<int>(lead0);
  }
  if (coeffs_.empty()) min_exp_ = 0;
}

Int LaurentBetaPoly::coeff(int k) const {
  int i = k - min_exp_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

LaurentBetaPoly LaurentBetaPoly::operator-() const {
  LaurentBetaPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentBetaPoly LaurentBetaPoly::operator+(const LaurentBetaPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  LaurentBetaPoly r;
  r.min_exp_ = std::min(min_exp_, o.min_exp_);
  int top = std::max(max_exp(), o.max_exp());
  r.coeffs_.assign(static_cast<size_t>(top - r.min_exp_ + 1), Int(0));
  for (int k = r.min_exp_; k <= top; ++k)
    r.coeffs_[static_cast<size_t>(k - r.min_exp_)] = coeff(k) + o.coeff(k);
  r.trim();
  return r;
}

LaurentBetaPoly LaurentBetaPoly::operator-(const LaurentBetaPoly& o) const {
  return *this + (-o);
}

LaurentBetaPoly LaurentBetaPoly::operator*(const LaurentBetaPoly& o) const {
  if (is_zero() || o.is_zero()) return LaurentBetaPoly();
  LaurentBetaPoly r;
  r.min_exp_ = min_exp_ + o.min_exp_;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  r.trim();
  return r;
}

LaurentBetaPoly LaurentBetaPoly::shifted(int k) const {
  LaurentBetaPoly r = *this;
  if (!r.coeffs_.empty()) r.min_exp_ += k;
  return r;
}

BetaPoly LaurentBetaPoly::to_beta_poly() const {
  if (!is_beta_nonneg())
    throw std::logic_error("LaurentBetaPoly: negative beta power survives");
  std::vector<Int> v(static_cast<size_t>(min_exp_), Int(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return BetaPoly(std::move(v));
}

BetaScalar LaurentBetaPoly::to_scalar() const {
  if (is_beta_nonneg()) return BetaScalar(to_beta_poly());
  return BetaScalar(BetaPoly(coeffs_), BetaPoly::monomial(1, -min_exp_));
}

std::string LaurentBetaPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = max_exp(); k >= min_exp(); --k) {
    Int c = coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "b";
      if (k != 1) out << "^" << k;
    }
  }
  return out.str();
}

// ---------- BetaScalar ----------

BetaScalar::BetaScalar(BetaPoly num, BetaPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw division_by_zero();
  if (num_.is_zero()) {
    den_ = BetaPoly(Int(1));
    return;
  }
  BetaPoly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  Int cn = num_.content(), cd = den_.content();
  Int g2 = [&] {
    Int a = cn, b = cd;
    while (b != 0) {
      Int r = a % b;
      a = b;
      b = r;
    }
    return a < 0 ? Int(-a) : a;
  }();
  if (g2 > 1) {
    BetaPoly gg{g2};
    num_ = num_.divexact(gg);
    den_ = den_.divexact(gg);
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

BetaScalar BetaScalar::rational(const Int& p, const Int& q) {
  return BetaScalar(BetaPoly(p), BetaPoly(q));
}

BetaScalar BetaScalar::beta_pow(int k) {
  return BetaScalar(BetaPoly::monomial(Int(1), k));
}

BetaScalar BetaScalar::operator-() const {
  BetaScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

BetaScalar BetaScalar::operator+(const BetaScalar& o) const {
  return BetaScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BetaScalar BetaScalar::operator-(const BetaScalar& o) const {
  return BetaScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

BetaScalar BetaScalar::operator*(const BetaScalar& o) const {
  return BetaScalar(num_ * o.num_, den_ * o.den_);
}

BetaScalar BetaScalar::operator/(const BetaScalar& o) const {
  if (o.is_zero()) throw division_by_zero();
  return BetaScalar(num_ * o.den_, den_ * o.num_);
}

BetaScalar BetaScalar::inverse() const {
  if (is_zero()) throw division_by_zero();
  return BetaScalar(den_, num_);
}

BetaScalar BetaScalar::at_beta_zero() const {
  Int d = den_.coeff(0);
  if (d == 0) throw division_by_zero();
  return rational(num_.coeff(0), d);
}

bool BetaScalar::is_rational_beta_monomial(int k) const {
  if (is_zero()) return true;
  if (!den_.is_constant()) return false;
  if (num_.degree() != k) return false;
  for (int j = 0; j < k; ++j)
    if (num_.coeff(j) != 0) return false;
  return true;
}

LaurentBetaPoly BetaScalar::to_laurent() const {
  if (is_zero()) return LaurentBetaPoly();
  // den must be a unit of Z[beta^{+-1}], i.e. +-b^k.
  int k = den_.degree();
  bool unit = true;
  for (int j = 0; j < k; ++j)
    if (den_.coeff(j) != 0) unit = false;
  Int lead = den_.coeff(k);
  if (!unit || (lead != 1 && lead != -1))
    throw std::logic_error("BetaScalar::to_laurent: value not in Z[beta^{+-1}]");
  LaurentBetaPoly r{num_};
  r = r.shifted(-k);
  return lead == 1 ? r : -r;
}

std::string BetaScalar::str() const {
  if (den_.is_one()) return num_.str();
  auto wrap = [](const BetaPoly& p) {
    std::string s = p.str();
    bool multi = s.find(" + ") != std::string::npos ||
                 s.find(" - ") != std::string::npos;
    return multi ? "(" + s + ")" : s;
  };
  return wrap(num_) + " / " + wrap(den_);
}

}  // namespace kq
