#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mfb/bounds.hpp"
#include "mfb/common.hpp"
#include "mfb/critical_locus.hpp"
#include "mfb/instance.hpp"

namespace mfb {

// Full CLI configuration; echoed verbatim into every report so a run can be
// reproduced from its own output.
struct RunConfig {
  std::string subcommand;
  std::string poly_text;
  std::optional<std::vector<std::string>> variables;
  std::vector<std::vector<std::string>> user_components;
  std::uint64_t seed = 0;
  std::optional<Int> prime_power_override;
  std::string format = "text";
  long long budget = kDefaultSPairBudget;
  bool assume_complete = false;
  std::optional<int> oracle_cap;
  std::string matrix_path;
  std::optional<Int> prime;
  int power = 1;
  bool full = false;
  std::vector<Int> mults;
  std::optional<Int> degree;
  std::vector<Int> factor_degrees;
  std::vector<Int> coprime_set;
};

struct ComponentReport {
  std::vector<std::string> zero_names;  // alphabetical
  int dim = 0;
  bool user_supplied = false;
  bool sampled = true;  // false only on the exact s = 0 path
  Int mu;
  std::optional<BoundTerm> term;
  std::optional<Int> special;
};

struct BoundReport {
  std::string poly_canonical;
  std::vector<std::string> variables;
  int n = 0;
  int d = 0;
  std::optional<PrimePower> prime_power;
  bool prime_overridden = false;
  int s = -1;
  bool complete = false;
  std::optional<Int> join_modulus;  // q > 1 when present
  std::vector<ComponentReport> components;
  Int naive;
  std::optional<Int> main;
  std::optional<Int> special;
  std::optional<Int> le;
  std::optional<Int> refined;
  Int best;
  std::vector<std::string> caveats;
};

namespace detail {

inline nlohmann::json json_int(const Int& v) { return v.get_str(); }

inline nlohmann::json json_opt_int(const std::optional<Int>& v) {
  if (!v) return nullptr;
  return v->get_str();
}

inline nlohmann::json config_echo(const RunConfig& cfg) {
  nlohmann::json j;
  j["subcommand"] = cfg.subcommand;
  j["poly"] = cfg.poly_text;
  if (cfg.variables)
    j["variables"] = *cfg.variables;
  else
    j["variables"] = nullptr;
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : cfg.user_components) comps.push_back(c);
  j["user_components"] = comps;
  j["seed"] = std::to_string(cfg.seed);
  j["prime_power"] = json_opt_int(cfg.prime_power_override);
  j["format"] = cfg.format;
  j["budget"] = std::to_string(cfg.budget);
  j["assume_complete"] = cfg.assume_complete;
  j["oracle_cap"] = cfg.oracle_cap ? nlohmann::json(std::to_string(*cfg.oracle_cap))
                                   : nlohmann::json(nullptr);
  j["matrix"] = cfg.matrix_path;
  j["prime"] = json_opt_int(cfg.prime);
  j["power"] = std::to_string(cfg.power);
  j["full"] = cfg.full;
  nlohmann::json mults = nlohmann::json::array();
  for (const Int& a : cfg.mults) mults.push_back(a.get_str());
  j["mults"] = mults;
  j["degree"] = json_opt_int(cfg.degree);
  nlohmann::json degs = nlohmann::json::array();
  for (const Int& a : cfg.factor_degrees) degs.push_back(a.get_str());
  j["factor_degrees"] = degs;
  nlohmann::json cop = nlohmann::json::array();
  for (const Int& a : cfg.coprime_set) cop.push_back(a.get_str());
  j["coprime_set"] = cop;
  return j;
}

}  // namespace detail

inline nlohmann::json bound_report_json(const BoundReport& rep, const RunConfig& cfg) {
  nlohmann::json j;

  nlohmann::json inst;
  inst["poly"] = rep.poly_canonical;
  inst["variables"] = rep.variables;
  inst["nvars"] = std::to_string(rep.variables.size());
  inst["n"] = std::to_string(rep.n);
  inst["degree"] = std::to_string(rep.d);
  inst["prime"] = rep.prime_power ? nlohmann::json(rep.prime_power->p.get_str())
                                  : nlohmann::json(nullptr);
  inst["prime_exponent"] = rep.prime_power ? nlohmann::json(std::to_string(rep.prime_power->m))
                                           : nlohmann::json(nullptr);
  inst["prime_overridden"] = rep.prime_overridden;
  inst["s"] = std::to_string(rep.s);
  inst["complete"] = rep.complete;
  inst["join_modulus"] = detail::json_opt_int(rep.join_modulus);
  j["instance"] = inst;

  nlohmann::json comps = nlohmann::json::array();
  for (const ComponentReport& c : rep.components) {
    nlohmann::json e;
    e["zero_vars"] = c.zero_names;
    e["dim"] = std::to_string(c.dim);
    e["provenance"] = c.user_supplied ? "user" : "enumerated";
    e["generic_confidence"] = c.sampled ? "sampled" : "exact";
    e["mu"] = c.mu.get_str();
    if (c.term) {
      e["epsilon"] = std::to_string(c.term->epsilon);
      e["r"] = c.term->r.get_str();
      e["term"] = c.term->value.get_str();
    } else {
      e["epsilon"] = nullptr;
      e["r"] = nullptr;
      e["term"] = nullptr;
    }
    e["special"] = detail::json_opt_int(c.special);
    comps.push_back(e);
  }
  j["components"] = comps;

  nlohmann::json b;
  b["naive"] = rep.naive.get_str();
  b["main"] = detail::json_opt_int(rep.main);
  b["special"] = detail::json_opt_int(rep.special);
  b["le"] = detail::json_opt_int(rep.le);
  b["refined"] = detail::json_opt_int(rep.refined);
  b["best"] = rep.best.get_str();
  j["bounds"] = b;

  j["caveats"] = rep.caveats;
  j["config"] = detail::config_echo(cfg);
  return j;
}

inline void render_bound_text(const BoundReport& rep, std::ostream& out) {
  out << "f = " << rep.poly_canonical << "\n";
  out << "degree " << rep.d;
  if (rep.prime_power) {
    out << " = " << rep.prime_power->p.get_str() << "^" << rep.prime_power->m;
    if (rep.prime_overridden) out << " (user override)";
  } else {
    out << " (not a prime power)";
  }
  out << ", " << rep.variables.size() << " variables (n = " << rep.n << ")\n";
  out << "critical locus: s = " << rep.s << ", " << rep.components.size()
      << " component(s), certified complete: " << (rep.complete ? "yes" : "no") << "\n";
  for (const ComponentReport& c : rep.components) {
    out << "  V(";
    for (std::size_t i = 0; i < c.zero_names.size(); ++i) {
      if (i) out << ",";
      out << c.zero_names[i];
    }
    out << ")  dim " << c.dim << "  mu = " << c.mu.get_str() << "  ["
        << (c.user_supplied ? "user" : "enumerated") << ", "
        << (c.sampled ? "sampled" : "exact") << "]";
    if (c.term)
      out << "  r = " << c.term->r.get_str() << "  term = " << c.term->value.get_str();
    if (c.special) out << "  special = " << c.special->get_str();
    out << "\n";
  }
  out << "naive bound:   " << rep.naive.get_str() << "\n";
  if (rep.main)
    out << "main bound:    " << rep.main->get_str() << "  (p = "
        << rep.prime_power->p.get_str() << ")\n";
  else
    out << "main bound:    (not applicable)\n";
  out << "special bound: " << (rep.special ? rep.special->get_str() : "(not applicable)")
      << "\n";
  out << "le bound:      " << (rep.le ? rep.le->get_str() : "(not applicable)") << "\n";
  if (rep.refined)
    out << "refined bound: " << rep.refined->get_str() << "  (multiple of "
        << rep.join_modulus->get_str() << ")\n";
  else
    out << "refined bound: (not applicable)\n";
  out << "best bound:    " << rep.best.get_str() << "\n";
  if (!rep.caveats.empty()) {
    out << "caveats:\n";
    for (const std::string& c : rep.caveats) out << "  - " << c << "\n";
  }
}

}  // namespace mfb
