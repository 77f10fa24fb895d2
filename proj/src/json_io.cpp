#include "kq/json_io.hpp"

#include <sstream>

namespace kq {

using nlohmann::json;

nlohmann::json pseries_to_json(const PSeries& a) {
  json terms = json::array();
  for (const auto& [lam, c] : a.terms())
    terms.push_back({{"partition", lam.parts()}, {"coeff", c.str()}});
  return {{"degree", a.degree()}, {"terms", terms}};
}

nlohmann::json finite_poly_to_json(const FinitePoly& a) {
  json terms = json::array();
  for (const auto& [m, c] : a.terms())
    terms.push_back({{"monomial", m}, {"coeff", c.str()}});
  return {{"nvars", a.nvars()}, {"terms", terms}};
}

nlohmann::json xseries_to_json(const TruncatedXSeries& a) {
  json j = finite_poly_to_json(a.poly());
  j["degree"] = a.degree();
  return j;
}

nlohmann::json expansion_to_json(const Expansion& e) {
  json coords = json::array();
  for (const auto& [lam, c] : e.coords)
    coords.push_back({{"partition", lam.parts()}, {"coeff", c.str()}});
  return {{"basis", basis_name(e.basis)}, {"degree", e.degree}, {"coords", coords}};
}

nlohmann::json formal_gp_to_json(const FormalGPPoly& f) {
  json terms = json::array();
  for (const auto& [key, c] : f.terms()) {
    std::vector<int> indices(key.parts().rbegin(), key.parts().rend());
    terms.push_back({{"indices", indices}, {"coeff", c.str()}});
  }
  return {{"terms", terms}};
}

nlohmann::json pairing_to_json(const PairingResult& r) {
  return {{"value", r.value.str()}, {"degree_used", r.degree_used}};
}

namespace {

std::string partition_label(const Partition& lam) {
  std::ostringstream out;
  out << "p[";
  for (int i = 0; i < lam.length(); ++i) {
    if (i) out << ",";
    out << lam.part(i);
  }
  out << "]";
  return out.str();
}

std::string monomial_label(const Monomial& m) {
  std::ostringstream out;
  bool any = false;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (any) out << "*";
    out << "x" << (i + 1);
    if (m[i] != 1) out << "^" << m[i];
    any = true;
  }
  return any ? out.str() : "1";
}

}  // namespace

std::string pseries_to_text(const PSeries& a) {
  std::ostringstream out;
  out << "degree " << a.degree() << "\n";
  if (a.is_zero()) out << "0\n";
  for (const auto& [lam, c] : a.terms())
    out << partition_label(lam) << " : " << c.str() << "\n";
  return out.str();
}

std::string finite_poly_to_text(const FinitePoly& a) {
  std::ostringstream out;
  if (a.is_zero()) out << "0\n";
  for (const auto& [m, c] : a.terms())
    out << monomial_label(m) << " : " << c.str() << "\n";
  return out.str();
}

std::string expansion_to_text(const Expansion& e) {
  std::ostringstream out;
  out << "basis " << basis_name(e.basis) << ", degree " << e.degree << "\n";
  for (const auto& [lam, c] : e.coords)
    out << lam.str() << " : " << c.str() << "\n";
  return out.str();
}

std::string formal_gp_to_inline(const FormalGPPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : f.terms()) {
    // Generator part, ascending indices: gp1^2*gp3
    std::string mono;
    for (int i = key.length() - 1; i >= 0; --i) {
      int idx = key.part(i);
      int mult = key.multiplicity(idx);
      if (i != key.length() - 1 && key.part(i + 1) == idx) continue;  // done
      if (!mono.empty()) mono += "*";
      mono += "gp" + std::to_string(idx);
      if (mult > 1) mono += "^" + std::to_string(mult);
    }
    std::string cs = c.str();
    bool multi_term =
        cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    bool negative = !multi_term && !cs.empty() && cs[0] == '-';
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (negative) cs = cs.substr(1);
    if (mono.empty()) {
      out << (multi_term ? "(" + cs + ")" : cs);
    } else if (cs == "1") {
      out << mono;
    } else if (multi_term) {
      out << "(" << cs << ")*" << mono;
    } else {
      out << cs << "*" << mono;
    }
  }
  return out.str();
}

std::string formal_gp_to_text(const FormalGPPoly& f) {
  std::ostringstream out;
  if (f.is_zero()) out << "0\n";
  for (const auto& [key, c] : f.terms()) {
    out << "gp[";
    for (int i = key.length() - 1; i >= 0; --i) {
      out << key.part(i);
      if (i) out << ",";
    }
    out << "] : " << c.str() << "\n";
  }
  return out.str();
}

}  // namespace kq
