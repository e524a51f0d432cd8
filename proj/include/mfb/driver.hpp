#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mfb/bounds.hpp"
#include "mfb/common.hpp"
#include "mfb/critical_locus.hpp"
#include "mfb/instance.hpp"
#include "mfb/milnor_oracle.hpp"
#include "mfb/monolab.hpp"
#include "mfb/parse.hpp"
#include "mfb/report.hpp"
#include "mfb/standard_basis.hpp"

namespace mfb {
namespace detail {

// A variable is a join direction when it occurs in exactly one term, as a
// pure d-th power: f = c*v^d + g with g free of v. The reduced cohomology of
// the fiber of f is then (d-1) copies of that of g, so every valid rank
// bound may be rounded down to a multiple of (d-1) per such variable.
inline int count_join_variables(const Polynomial& f, int d) {
  int count = 0;
  for (std::size_t v = 0; v < f.var_count(); ++v) {
    bool pure = false;
    bool elsewhere = false;
    for (const auto& t : f.terms()) {
      int e = t.mono.e[v];
      if (e == 0) continue;
      if (e == d && t.mono.degree() == d)
        pure = true;
      else
        elsewhere = true;
    }
    if (pure && !elsewhere) ++count;
  }
  return count;
}

inline std::vector<int> component_indices(const std::vector<std::string>& names,
                                          const std::vector<std::string>& vars) {
  std::set<int> idx;
  for (const std::string& name : names) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
      throw UsageError("unknown variable in --component: '" + name + "'");
    idx.insert(static_cast<int>(it - vars.begin()));
  }
  return {idx.begin(), idx.end()};
}

inline std::string component_label(const ComponentDescriptor& comp,
                                   const std::vector<std::string>& vars) {
  std::vector<std::string> names;
  for (int v : comp.zero_vars) names.push_back(vars[v]);
  std::sort(names.begin(), names.end());
  std::string label = "V(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) label += ",";
    label += names[i];
  }
  return label + ")";
}

}  // namespace detail

inline int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  if (cfg.poly_text.empty()) throw UsageError("bound requires --poly");
  Polynomial f = parse_polynomial(cfg.poly_text, cfg.variables);
  ProblemInstance inst = make_instance(std::move(f));
  const std::vector<std::string>& vars = inst.f.variables();

  BoundReport rep;
  rep.poly_canonical = inst.f.str();
  rep.variables = vars;
  rep.n = inst.n;
  rep.d = inst.d;
  rep.prime_power = inst.prime_power;
  if (cfg.prime_power_override) {
    std::optional<PrimePower> pp = prime_power_decompose(*cfg.prime_power_override);
    if (!pp) throw UsageError("--prime-power value must be a prime power");
    rep.prime_power = pp;
    rep.prime_overridden = true;
  }

  Budget budget(cfg.budget);
  auto [J, s] = critical_locus(inst.f, budget);
  inst.s = s;
  rep.s = s;

  if (s < 0) {
    // Empty critical locus: only degree-1 forms. Nothing to bound.
    rep.complete = true;
    rep.naive = 0;
    rep.best = 0;
    if (rep.prime_power) rep.main = Int(0);
    rep.caveats.push_back("critical locus is empty; every rank bound is 0");
    if (cfg.format == "json")
      out << bound_report_json(rep, cfg).dump(2) << "\n";
    else
      render_bound_text(rep, out);
    return 0;
  }

  CriticalLocusReport found = enumerate_coordinate_components(J, s);
  // A zero-dimensional critical cone is the origin alone, so the list is
  // exhaustive even when the ideal is not monomial.
  if (s == 0) found.complete = true;

  for (const std::vector<std::string>& names : cfg.user_components) {
    ComponentDescriptor comp;
    comp.zero_vars = detail::component_indices(names, vars);
    comp.dim = static_cast<int>(vars.size() - comp.zero_vars.size());
    comp.provenance = ComponentDescriptor::Provenance::kUserSupplied;
    if (!verify_user_component(J, s, comp))
      throw DegeneracyError("component " + detail::component_label(comp, vars) +
                            " failed verification against the critical ideal");
    if (std::find(found.components.begin(), found.components.end(), comp) ==
        found.components.end())
      found.components.push_back(std::move(comp));
  }
  std::sort(found.components.begin(), found.components.end(),
            [](const ComponentDescriptor& a, const ComponentDescriptor& b) {
              return a.zero_vars < b.zero_vars;
            });
  if (found.components.empty())
    throw DegeneracyError(
        "no coordinate components of the critical locus were found; apply a "
        "linear change of variables and supply --component");

  rep.complete = found.complete;
  const bool user_confirmed = cfg.assume_complete || !cfg.user_components.empty();
  bool any_sampled = false;

  std::vector<BoundTerm> terms;
  bool all_special = (s >= 1 && inst.n - s >= 1);
  Int special_sum = 0;
  std::vector<Int> mus;
  for (ComponentDescriptor& comp : found.components) {
    ComponentReport cr;
    for (int v : comp.zero_vars) cr.zero_names.push_back(vars[v]);
    std::sort(cr.zero_names.begin(), cr.zero_names.end());
    cr.dim = comp.dim;
    cr.user_supplied = comp.provenance == ComponentDescriptor::Provenance::kUserSupplied;
    if (s == 0) {
      MilnorResult mu = milnor_number_at_origin(inst.f, budget);
      if (!mu.finite)
        throw DegeneracyError("critical locus has dimension 0 yet the Milnor "
                              "number is infinite; input is inconsistent");
      cr.mu = mu.value;
      cr.sampled = false;
    } else {
      cr.mu = generic_milnor_number(inst.f, comp, cfg.seed, budget);
      cr.sampled = true;
      any_sampled = true;
    }
    comp.mu_generic = cr.mu;
    mus.push_back(cr.mu);
    if (rep.prime_power) {
      cr.term = component_bound(cr.mu, rep.prime_power->p, inst.n, s);
      terms.push_back(*cr.term);
    }
    if (s >= 1 && inst.n - s >= 1) {
      cr.special = special_case_bound(cr.mu, Int(inst.d), inst.n - s);
      if (cr.special)
        special_sum += *cr.special;
      else
        all_special = false;
    }
    rep.components.push_back(std::move(cr));
  }

  rep.naive = naive_bound(mus);
  if (rep.prime_power) rep.main = total_bound(terms);
  if (all_special) rep.special = special_sum;
  if (inst.d >= 2) rep.le = le_attaching_bound(Int(inst.d), inst.n, s);

  Int best = rep.naive;
  if (rep.main && *rep.main < best) best = *rep.main;
  if (rep.special && *rep.special < best) best = *rep.special;
  if (rep.le && *rep.le < best) best = *rep.le;
  const int join_count = detail::count_join_variables(inst.f, inst.d);
  if (inst.d >= 2 && join_count >= 1) {
    Int q;
    Int base = Int(inst.d) - 1;
    mpz_pow_ui(q.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(join_count));
    if (q > 1) {
      rep.join_modulus = q;
      rep.refined = multiple_refinement(best, q);
      if (*rep.refined < best) best = *rep.refined;
    }
  }
  rep.best = best;

  if (s >= 1 && !rep.complete) {
    if (user_confirmed)
      rep.caveats.push_back(
          "component list is user-confirmed; completeness is not machine-certified");
    else
      rep.caveats.push_back(
          "component enumeration is not certified complete; bounds are "
          "conditional on this component list (confirm with --assume-complete "
          "or --component)");
  }
  if (any_sampled)
    rep.caveats.push_back(
        "transversal Milnor numbers are sampled; two-sample agreement is "
        "evidence of genericity, not a proof");
  if (!rep.prime_power && inst.d >= 2)
    rep.caveats.push_back("degree " + std::to_string(inst.d) +
                          " is not a prime power, so the main bound is "
                          "unavailable (force a choice with --prime-power)");
  if (rep.prime_overridden) {
    Int pm;
    mpz_pow_ui(pm.get_mpz_t(), rep.prime_power->p.get_mpz_t(),
               static_cast<unsigned long>(rep.prime_power->m));
    if (pm != inst.d)
      rep.caveats.push_back("main bound uses the supplied prime power " +
                            rep.prime_power->p.get_str() + "^" +
                            std::to_string(rep.prime_power->m) +
                            ", which differs from the degree " +
                            std::to_string(inst.d) +
                            "; that bound is conditional on the override");
  }

  if (cfg.format == "json")
    out << bound_report_json(rep, cfg).dump(2) << "\n";
  else
    render_bound_text(rep, out);
  return 0;
}

inline int cmd_mu(const RunConfig& cfg, std::ostream& out) {
  if (cfg.poly_text.empty()) throw UsageError("mu requires --poly");
  Polynomial f = parse_polynomial(cfg.poly_text, cfg.variables);
  Budget budget(cfg.budget);
  MilnorResult res = milnor_number_at_origin(f, budget);

  std::optional<OracleResult> oracle;
  if (cfg.oracle_cap) {
    if (*cfg.oracle_cap < 1) throw UsageError("--oracle-cap must be positive");
    oracle = milnor_truncation_oracle(f, *cfg.oracle_cap);
  }
  std::vector<std::string> caveats;
  bool mismatch = false;
  if (oracle && !oracle->stable)
    caveats.push_back("truncation dimensions have not stabilized; raise --oracle-cap");
  if (oracle && oracle->stable && res.finite && oracle->value != res.value) {
    mismatch = true;
    caveats.push_back("truncation oracle disagrees with the standard-basis count");
  }

  if (cfg.format == "json") {
    nlohmann::json j;
    nlohmann::json inst;
    inst["poly"] = f.str();
    inst["variables"] = f.variables();
    j["instance"] = inst;
    nlohmann::json r;
    r["isolated"] = res.finite;
    r["mu"] = res.finite ? nlohmann::json(res.value.get_str()) : nlohmann::json(nullptr);
    if (oracle) {
      nlohmann::json o;
      o["cap"] = std::to_string(*cfg.oracle_cap);
      o["stable"] = oracle->stable;
      o["value"] = oracle->stable ? nlohmann::json(oracle->value.get_str())
                                  : nlohmann::json(nullptr);
      o["agrees"] = (oracle->stable && res.finite) ? nlohmann::json(!mismatch)
                                                   : nlohmann::json(nullptr);
      r["oracle"] = o;
    } else {
      r["oracle"] = nullptr;
    }
    j["result"] = r;
    j["caveats"] = caveats;
    j["config"] = detail::config_echo(cfg);
    out << j.dump(2) << "\n";
  } else {
    out << "f = " << f.str() << "\n";
    if (res.finite)
      out << "mu = " << res.value.get_str() << "\n";
    else
      out << "non-isolated singularity at the origin (mu is infinite)\n";
    if (oracle) {
      if (oracle->stable)
        out << "oracle: stable at cap " << *cfg.oracle_cap << ", value "
            << oracle->value.get_str() << (mismatch ? " (DISAGREES)" : " (agrees)")
            << "\n";
      else
        out << "oracle: not stabilized at cap " << *cfg.oracle_cap << "\n";
    }
    for (const std::string& c : caveats) out << "caveat: " << c << "\n";
  }
  if (!res.finite || mismatch) return 2;
  return 0;
}

inline int cmd_charcheck(const RunConfig& cfg, std::ostream& out) {
  if (cfg.matrix_path.empty()) throw UsageError("charcheck requires --matrix");
  if (!cfg.prime) throw UsageError("charcheck requires --prime");
  if (!is_prime(*cfg.prime)) throw UsageError("--prime must be a prime number");
  if (cfg.power < 1) throw UsageError("--power must be positive");
  std::ifstream in(cfg.matrix_path);
  if (!in) throw UsageError("cannot open matrix file: " + cfg.matrix_path);
  IntMatrix a = parse_matrix(in);

  const Int& p = *cfg.prime;
  Int pm;
  mpz_pow_ui(pm.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(cfg.power));
  IntPolynomial char_a = charpoly_exact(a);
  IntPolynomial char_power = charpoly_exact(matrix_power(a, pm));
  IntPolynomial lhs = char_a.reduced_mod(p);
  IntPolynomial rhs = char_power.reduced_mod(p);
  const bool equal = lhs == rhs;

  std::optional<CyclotomicFactorization> quasi;
  std::optional<bool> invariant;
  std::vector<std::string> caveats;
  if (cfg.full) {
    if (char_a.coeff(0) == 0) {
      quasi = CyclotomicFactorization{};  // 0 is an eigenvalue, not a root of unity
      caveats.push_back("matrix is singular; eigenvalue 0 rules out quasi-unipotence");
    } else {
      quasi = is_quasiunipotent(char_a);
    }
    if (quasi->quasiunipotent)
      invariant = charpoly_inverse_invariance(char_a);
    else
      caveats.push_back(
          "inverse-invariance check skipped: characteristic polynomial is not "
          "a product of cyclotomics");
  }

  if (cfg.format == "json") {
    nlohmann::json j;
    nlohmann::json r;
    r["size"] = std::to_string(a.size());
    r["p"] = p.get_str();
    r["m"] = std::to_string(cfg.power);
    r["p_to_m"] = pm.get_str();
    r["char_matrix"] = char_a.str("x");
    r["char_power"] = char_power.str("x");
    r["char_matrix_mod_p"] = lhs.str("x");
    r["char_power_mod_p"] = rhs.str("x");
    r["equal_mod_p"] = equal;
    if (quasi) {
      nlohmann::json q;
      q["quasiunipotent"] = quasi->quasiunipotent;
      nlohmann::json factors = nlohmann::json::object();
      for (const auto& [k, mult] : quasi->factors)
        factors[std::to_string(k)] = std::to_string(mult);
      q["cyclotomic_factors"] = factors;
      r["quasiunipotence"] = q;
    } else {
      r["quasiunipotence"] = nullptr;
    }
    r["inverse_invariant"] =
        invariant ? nlohmann::json(*invariant) : nlohmann::json(nullptr);
    j["result"] = r;
    j["caveats"] = caveats;
    j["config"] = detail::config_echo(cfg);
    out << j.dump(2) << "\n";
  } else {
    out << "matrix: " << a.size() << " x " << a.size() << "\n";
    out << "char(A)       = " << char_a.str("x") << "\n";
    out << "char(A^" << pm.get_str() << ") = " << char_power.str("x") << "\n";
    out << "mod " << p.get_str() << ":      " << lhs.str("x") << "  vs  "
        << rhs.str("x") << "\n";
    out << "verdict: " << (equal ? "equal" : "NOT equal") << " mod " << p.get_str()
        << "\n";
    if (quasi) {
      out << "quasi-unipotent: " << (quasi->quasiunipotent ? "yes" : "no");
      if (quasi->quasiunipotent) {
        out << " (";
        bool first = true;
        for (const auto& [k, mult] : quasi->factors) {
          if (!first) out << " * ";
          first = false;
          out << "Phi_" << k;
          if (mult > 1) out << "^" << mult;
        }
        out << ")";
      }
      out << "\n";
    }
    if (invariant)
      out << "inverse-invariant coefficients: " << (*invariant ? "yes" : "no") << "\n";
    for (const std::string& c : caveats) out << "caveat: " << c << "\n";
  }
  return 0;
}

inline int cmd_nonreduced(const RunConfig& cfg, std::ostream& out) {
  if (cfg.mults.empty()) throw UsageError("nonreduced requires --mults");
  if (!cfg.degree) throw UsageError("nonreduced requires --degree");
  NonreducedAnalysis res =
      nonreduced_analysis(cfg.mults, *cfg.degree, cfg.factor_degrees, cfg.coprime_set);
  if (cfg.format == "json") {
    nlohmann::json j;
    nlohmann::json r;
    r["component_count"] = res.component_count.get_str();
    r["rank_h0"] = res.rank_h0.get_str();
    r["mu_sum_bound"] = res.mu_sum_bound.get_str();
    j["result"] = r;
    j["caveats"] = nlohmann::json::array();
    j["config"] = detail::config_echo(cfg);
    out << j.dump(2) << "\n";
  } else {
    out << "fiber components: " << res.component_count.get_str() << "\n";
    out << "rank of reduced H^0: " << res.rank_h0.get_str() << "\n";
    out << "mu-sum bound on that rank: " << res.mu_sum_bound.get_str() << "\n";
  }
  return 0;
}

inline int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "bound") return cmd_bound(cfg, out);
    if (cfg.subcommand == "mu") return cmd_mu(cfg, out);
    if (cfg.subcommand == "charcheck") return cmd_charcheck(cfg, out);
    if (cfg.subcommand == "nonreduced") return cmd_nonreduced(cfg, out);
    throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const DegeneracyError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mfb
