#pragma once

#include <json.hpp>

#include "kq/expand.hpp"
#include "kq/pairing.hpp"

namespace kq {

// Canonical JSON forms.  Term order in every array follows the canonical
// map order (weight/total degree ascending, descending-lex within), and
// coefficients use the canonical text form of BetaScalar, so serialization
// is byte-stable.

nlohmann::json pseries_to_json(const PSeries& a);
nlohmann::json finite_poly_to_json(const FinitePoly& a);
nlohmann::json xseries_to_json(const TruncatedXSeries& a);
nlohmann::json expansion_to_json(const Expansion& e);
nlohmann::json formal_gp_to_json(const FormalGPPoly& f);
nlohmann::json pairing_to_json(const PairingResult& r);

std::string pseries_to_text(const PSeries& a);
std::string finite_poly_to_text(const FinitePoly& a);
std::string expansion_to_text(const Expansion& e);
std::string formal_gp_to_text(const FormalGPPoly& f);
/// One-line rendering, e.g. "gp1^2 - b*gp1".
std::string formal_gp_to_inline(const FormalGPPoly& f);

}  // namespace kq
