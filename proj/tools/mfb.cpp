#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mfb/driver.hpp"

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      current += ch;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

mfb::Int to_int(const std::string& text, const std::string& flag) {
  try {
    return mfb::Int(text, 10);
  } catch (const std::invalid_argument&) {
    throw mfb::UsageError(flag + " expects an integer, got '" + text + "'");
  }
}

std::vector<mfb::Int> to_int_list(const std::string& text, const std::string& flag) {
  std::vector<mfb::Int> out;
  for (const std::string& tok : split_list(text)) out.push_back(to_int(tok, flag));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank bounds for Milnor fiber cohomology of homogeneous polynomials"};
  app.require_subcommand(1);

  std::string poly;
  std::string vars_text;
  std::vector<std::string> component_texts;
  std::uint64_t seed = 0;
  std::string prime_power_text;
  std::string format = "text";
  long long budget = mfb::kDefaultSPairBudget;
  bool assume_complete = false;
  int oracle_cap = 0;
  std::string matrix_path;
  std::string prime_text;
  int power = 1;
  bool full = false;
  std::string mults_text;
  std::string degree_text;
  std::string degrees_text;
  std::string coprime_text;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "reduction-step budget")
        ->envname("MILNOR_BUDGET")
        ->capture_default_str();
  };
  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("--poly", poly, "polynomial over Q, explicit '*' and '^'")
        ->required();
    sub->add_option("--vars", vars_text,
                    "comma-separated variable order (default: order of first use)");
  };

  CLI::App* bound = app.add_subcommand("bound", "rank bounds for a homogeneous polynomial");
  add_poly(bound);
  bound->add_option("--component", component_texts,
                    "component as comma-separated zero variables (repeatable)");
  bound->add_option("--seed", seed, "sampling seed")->capture_default_str();
  bound->add_option("--prime-power", prime_power_text,
                    "prime power to use for the main bound instead of the degree");
  bound->add_flag("--assume-complete", assume_complete,
                  "treat the component list as complete");
  add_budget(bound);
  add_format(bound);

  CLI::App* mu = app.add_subcommand("mu", "Milnor number at the origin");
  add_poly(mu);
  mu->add_option("--oracle-cap", oracle_cap,
                 "cross-check with the truncated-algebra dimension at this degree cap")
      ->check(CLI::PositiveNumber);
  add_budget(mu);
  add_format(mu);

  CLI::App* charcheck =
      app.add_subcommand("charcheck", "characteristic polynomial congruence of A vs A^(p^m)");
  charcheck->add_option("--matrix", matrix_path, "matrix file: n, then n rows of n integers")
      ->required();
  charcheck->add_option("--prime", prime_text, "prime p")->required();
  charcheck->add_option("--power", power, "exponent m of p")->capture_default_str();
  charcheck->add_flag("--full", full, "also test quasi-unipotence and inverse invariance");
  add_format(charcheck);

  CLI::App* nonreduced =
      app.add_subcommand("nonreduced", "fiber components of a non-reduced form");
  nonreduced->add_option("--mults", mults_text, "comma-separated factor multiplicities")
      ->required();
  nonreduced->add_option("--degree", degree_text, "total degree")->required();
  nonreduced->add_option("--degrees", degrees_text,
                         "comma-separated factor degrees (default: all 1)");
  nonreduced->add_option("--coprime-set", coprime_text,
                         "multiplicities coprime to the degree to exclude");
  add_format(nonreduced);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  mfb::RunConfig cfg;
  try {
    cfg.format = format;
    cfg.budget = budget;
    if (!vars_text.empty()) cfg.variables = split_list(vars_text);
    cfg.poly_text = poly;
    if (app.got_subcommand(bound)) {
      cfg.subcommand = "bound";
      cfg.seed = seed;
      cfg.assume_complete = assume_complete;
      for (const std::string& c : component_texts) {
        std::vector<std::string> names = split_list(c);
        if (names.empty()) throw mfb::UsageError("--component needs variable names");
        cfg.user_components.push_back(std::move(names));
      }
      if (!prime_power_text.empty())
        cfg.prime_power_override = to_int(prime_power_text, "--prime-power");
    } else if (app.got_subcommand(mu)) {
      cfg.subcommand = "mu";
      if (mu->count("--oracle-cap") > 0) cfg.oracle_cap = oracle_cap;
    } else if (app.got_subcommand(charcheck)) {
      cfg.subcommand = "charcheck";
      cfg.matrix_path = matrix_path;
      cfg.prime = to_int(prime_text, "--prime");
      cfg.power = power;
      cfg.full = full;
    } else if (app.got_subcommand(nonreduced)) {
      cfg.subcommand = "nonreduced";
      cfg.mults = to_int_list(mults_text, "--mults");
      cfg.degree = to_int(degree_text, "--degree");
      if (!degrees_text.empty()) cfg.factor_degrees = to_int_list(degrees_text, "--degrees");
      if (!coprime_text.empty()) cfg.coprime_set = to_int_list(coprime_text, "--coprime-set");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  return mfb::run_command(cfg, std::cout, std::cerr);
}
