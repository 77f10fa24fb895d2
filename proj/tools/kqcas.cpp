// kqcas: exact computations with the K-theoretic Q-function families and
// their dual gp-polynomials, with a verification harness for the algebra's
// identities.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "kq/json_io.hpp"
#include "kq/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "v1";

struct Options {
  int degree = 10;
  int vars = 4;
  int zorder = 12;
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  bool vars_set = false;
  bool degree_set = false;
};

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

fs::path resolve_cache_dir(const Options& opt) {
  if (!opt.cache_dir.empty()) return opt.cache_dir;
  if (const char* env = std::getenv("KQCAS_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return fs::path(xdg) / "kqcas";
  if (const char* home = std::getenv("HOME"))
    return fs::path(home) / ".cache" / "kqcas";
  return fs::path(".kqcas-cache");
}

std::optional<std::string> cache_read(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Concurrent-writer safe: write to a unique temp file, then rename.
void cache_write(const fs::path& file, const std::string& bytes) {
  std::error_code ec;
  fs::create_directories(file.parent_path(), ec);
  fs::path tmp = file;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;  // cache is best-effort
    out << bytes;
  }
  fs::rename(tmp, file, ec);
  if (ec) fs::remove(tmp, ec);
}

struct TargetAtom {
  std::string tag;  // family tag, or "p" for a plain power sum
  int n = 0;
};

std::optional<TargetAtom> parse_atom(const std::string& tok) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  for (const char* tag : {"ovqG", "ovqg", "pG", "pg", "qG", "qg", "GQ", "gp", "p"}) {
    std::string t(tag);
    if (tok.size() > t.size() && tok.compare(0, t.size(), t) == 0 &&
        is_int(tok.substr(t.size())))
      return TargetAtom{t, std::stoi(tok.substr(t.size()))};
  }
  // Index-infix spelling: q1G, p3g, ovq2G ...
  for (const char* base : {"ovq", "p", "q"}) {
    std::string b(base);
    if (tok.size() > b.size() + 1 && tok.compare(0, b.size(), b) == 0 &&
        (tok.back() == 'G' || tok.back() == 'g')) {
      std::string mid = tok.substr(b.size(), tok.size() - b.size() - 1);
      if (is_int(mid)) return TargetAtom{b + tok.back(), std::stoi(mid)};
    }
  }
  return std::nullopt;
}

bool atom_is_g_side(const TargetAtom& a) {
  return a.tag == "pg" || a.tag == "qg" || a.tag == "ovqg" || a.tag == "gp";
}

// A product of family elements (or plain power sums), e.g. "qG1*qG1".
kq::PSeries build_target(const std::string& expr, int D) {
  std::vector<TargetAtom> atoms;
  std::string tok;
  std::istringstream in(expr);
  while (std::getline(in, tok, '*')) {
    auto atom = parse_atom(tok);
    if (!atom) throw std::invalid_argument("cannot parse target token '" + tok + "'");
    if (atom->tag != "p" && !kq::is_valid_family_id({atom->tag, atom->n}))
      throw std::invalid_argument("invalid family element '" + tok + "'");
    atoms.push_back(*atom);
  }
  if (atoms.empty()) throw std::invalid_argument("empty target expression");

  bool pure_g = true;
  int exact_degree = 0;
  for (const auto& a : atoms) {
    pure_g = pure_g && atom_is_g_side(a);
    exact_degree += std::max(a.n, 0);
  }
  // g-side products are exact polynomials; build them at their own degree so
  // nothing is truncated away.
  int degree = pure_g ? exact_degree : D;
  kq::PSeries acc = kq::PSeries::constant(kq::BetaScalar(1), degree);
  for (const auto& a : atoms) {
    kq::PSeries e = a.tag == "p" ? kq::PSeries::power_sum(a.n, degree)
                                 : kq::family_element({a.tag, a.n}, degree);
    if (e.degree() < degree) e = e.with_degree_bound(degree);
    acc = acc * e;
  }
  return acc;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

int cmd_family(const Options& opt, const std::string& tag, int n,
               std::optional<int> vars) {
  kq::FamilyId id{tag, n};
  if (!kq::is_valid_family_id(id))
    return usage_error("invalid family element: tag '" + tag + "', n " +
                       std::to_string(n));

  fs::path cache_file;
  if (!opt.no_cache) {
    std::ostringstream key;
    key << kSchemaVersion << "_family_" << tag << "_n" << n << "_D" << opt.degree;
    if (vars) key << "_N" << *vars;
    key << (opt.format == "json" ? ".json" : ".txt");
    cache_file = resolve_cache_dir(opt) / key.str();
    if (auto hit = cache_read(cache_file)) {
      std::cout << *hit;
      return 0;
    }
  }

  std::string out;
  if (vars) {
    kq::FinitePoly poly(*vars);
    bool exact = false;
    if (tag == "GQ" && n >= 1) {
      poly = kq::GQ_finite(n, *vars);
      exact = true;
    } else {
      kq::PSeries e = kq::family_element(id, opt.degree);
      auto xs = kq::specialize(e, *vars);
      poly = xs.poly();
      exact = tag == "pg" || tag == "qg" || tag == "ovqg" || tag == "gp" ||
              (tag == "GQ" && n <= 0);
    }
    json j = kq::finite_poly_to_json(poly);
    j["family"] = tag;
    j["n"] = n;
    j["vars"] = *vars;
    if (!exact) j["degree"] = opt.degree;
    out = opt.format == "json"
              ? render(j)
              : kq::finite_poly_to_text(poly);
  } else {
    kq::PSeries e = kq::family_element(id, opt.degree);
    json j = kq::pseries_to_json(e);
    j["family"] = tag;
    j["n"] = n;
    out = opt.format == "json" ? render(j) : kq::pseries_to_text(e);
  }
  std::cout << out;
  if (!opt.no_cache) cache_write(cache_file, out);
  return 0;
}

int cmd_expand(const Options& opt, const std::string& target,
               const std::string& basis_name_str) {
  kq::Basis basis = kq::basis_from_name(basis_name_str);
  kq::PSeries t = build_target(target, opt.degree);
  kq::Expansion e = kq::expand_in_basis(t, basis, t.degree());
  std::cout << (opt.format == "json" ? render(kq::expansion_to_json(e))
                                     : kq::expansion_to_text(e));
  return 0;
}

int cmd_pair(const Options& opt, const std::string& left,
             const std::string& right) {
  kq::PSeries g = build_target(right, opt.degree);
  int need = 0;
  for (const auto& [lam, c] : g.terms()) need = std::max(need, lam.weight());
  kq::PSeries f = build_target(left, std::max(opt.degree, need));
  kq::PairingResult r = kq::pair_functions(f, g);
  if (opt.format == "json") {
    std::cout << render(kq::pairing_to_json(r));
  } else {
    std::cout << "value " << r.value.str() << " (degree used " << r.degree_used
              << ")\n";
  }
  return 0;
}

int cmd_verify(const Options& opt, const std::string& suite) {
  auto names = kq::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    return usage_error("unknown suite '" + suite + "'");
  kq::VerifyConfig cfg;
  cfg.degree = opt.degree;
  cfg.vars = opt.vars;
  cfg.zorder = opt.zorder;
  // Flag overrides swap in a requested cauchy instance only when that suite
  // is run directly; `all` keeps the pinned instances.
  cfg.explicit_vars = opt.vars_set && suite == "cauchy";
  cfg.explicit_degree = opt.degree_set && suite == "cauchy";
  auto results = kq::run_suite(suite, cfg);
  bool all_pass = true;
  if (opt.format != "json" && (suite == "gpz" || suite == "all")) {
    auto table = kq::gp_even_to_odd(4);
    for (const auto& [idx, formula] : table)
      std::cout << "gp_" << idx << " = " << kq::formal_gp_to_inline(formula)
                << "\n";
  }
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"check", r.name},
                     {"pass", r.pass},
                     {"ms", r.millis},
                     {"detail", r.detail}});
      all_pass = all_pass && r.pass;
    }
    std::cout << render(json{{"suite", suite}, {"results", arr}});
  } else {
    char buf[64];
    for (const auto& r : results) {
      std::snprintf(buf, sizeof(buf), "%.1f", r.millis);
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << buf
                << " ms)";
      if (!r.pass) std::cout << "  -- " << r.detail;
      std::cout << "\n";
      all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_gp_even(const Options& opt, int max_index) {
  if (max_index < 2) return usage_error("--max must be at least 2");
  auto table = kq::gp_even_to_odd(max_index);
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& [idx, formula] : table)
      arr.push_back({{"index", idx}, {"formula", kq::formal_gp_to_json(formula)}});
    std::cout << render(json{{"max", max_index}, {"table", arr}});
  } else {
    for (const auto& [idx, formula] : table) {
      std::cout << "gp_" << idx << ":\n" << kq::formal_gp_to_text(formula);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kqcas: exact arithmetic for the K-theoretic Q-function families, "
      "their dual gp-polynomials, basis expansions and identity checks"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--degree", opt.degree, "truncation degree D")->check(CLI::PositiveNumber);
  app.add_option("--vars", opt.vars, "number of variables N")->check(CLI::PositiveNumber);
  app.add_option("--z-order", opt.zorder, "z-series order M")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache-dir", opt.cache_dir, "result cache directory");
  app.add_flag("--no-cache", opt.no_cache, "bypass the on-disk cache");

  auto* fam = app.add_subcommand("family", "emit one family element");
  fam->fallthrough();
  std::string fam_tag;
  int fam_n = 0;
  fam->add_option("--tag", fam_tag, "family tag (pG pg qG qg ovqG ovqg GQ gp)")
      ->required();
  fam->add_option("--n", fam_n, "index")->required();

  auto* exp = app.add_subcommand("expand", "expand a target in a basis");
  exp->fallthrough();
  std::string exp_target, exp_basis;
  exp->add_option("--target", exp_target, "family element or '*'-product")->required();
  exp->add_option("--basis", exp_basis,
                  "pG_odd qG_odd ovqG_odd qG_strict ovqG_strict pg_odd qg_odd "
                  "ovqg_odd qg_strict ovqg_strict GQ_odd")
      ->required();

  auto* pr = app.add_subcommand("pair", "bilinear pairing of two targets");
  pr->fallthrough();
  std::string pair_left, pair_right;
  pr->add_option("--left", pair_left, "left (K-Q side) target")->required();
  pr->add_option("--right", pair_right, "right (dual side) target")->required();

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->fallthrough();
  std::string suite = "all";
  ver->add_option("--suite", suite,
                  "recurrences cancellation integrality pairing cauchy gpz all");

  auto* gpe = app.add_subcommand("gp-even", "emit the even-gp elimination table");
  gpe->fallthrough();
  int gp_max = 0;  // defaults to --z-order
  gpe->add_option("--max", gp_max, "largest index to include (default: --z-order)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opt.vars_set = app.count("--vars") > 0;
  opt.degree_set = app.count("--degree") > 0;
  if (ver->parsed() && app.count("--format") == 0) opt.format = "text";

  try {
    if (fam->parsed()) {
      std::optional<int> vars;
      if (opt.vars_set) vars = opt.vars;
      return cmd_family(opt, fam_tag, fam_n, vars);
    }
    if (exp->parsed()) return cmd_expand(opt, exp_target, exp_basis);
    if (pr->parsed()) return cmd_pair(opt, pair_left, pair_right);
    if (ver->parsed()) return cmd_verify(opt, suite);
    if (gpe->parsed()) return cmd_gp_even(opt, gp_max > 0 ? gp_max : opt.zorder);
  } catch (const kq::membership_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return usage_error("no subcommand given");
}
