#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfb/common.hpp"
#include "mfb/polynomial.hpp"

namespace mfb {

// Recursive-descent parser for the CLI polynomial grammar:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := [coeff] ('*' factor)*  |  factor ('*' factor)*
//   coeff  := integer ['/' posint]
//   factor := var ['^' posint]
//   var    := [A-Za-z][A-Za-z0-9_]*
//
// Whitespace is insignificant; '*' between factors is mandatory. When no
// variable list is supplied, variables are taken in order of first appearance.
namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text,
             const std::optional<std::vector<std::string>>& variables)
      : text_(text) {
    if (variables) {
      explicit_vars_ = true;
      vars_ = *variables;
      for (std::size_t i = 0; i < vars_.size(); ++i) var_index_[vars_[i]] = i;
    }
  }

  Polynomial run() {
    skip_ws();
    if (eof()) throw ParseError("empty polynomial", pos_);
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (get() == '-') sign = -1;
    }
    parse_term(sign);
    skip_ws();
    while (!eof()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      get();
      parse_term(c == '-' ? -1 : 1);
      skip_ws();
    }
    std::vector<Polynomial::Term> terms;
    terms.reserve(raw_terms_.size());
    for (auto& [exps, coeff] : raw_terms_) {
      Monomial m = Monomial::one(vars_.size());
      for (auto& [vi, e] : exps) m.e[vi] += e;
      terms.push_back({std::move(m), std::move(coeff)});
    }
    return Polynomial::from_terms(vars_, std::move(terms));
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Int parse_integer_digits() {
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Int(std::string(text_.substr(start, pos_ - start)), 10);
  }

  int parse_exponent() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected exponent", pos_);
    std::size_t at = pos_;
    Int e = parse_integer_digits();
    if (e == 0) throw ParseError("exponent must be positive", at);
    if (e > 1000000) throw ParseError("exponent too large", at);
    return static_cast<int>(e.get_si());
  }

  std::size_t parse_variable() {
    skip_ws();
    std::size_t at = pos_;
    if (eof() || !(std::isalpha(static_cast<unsigned char>(peek()))))
      throw ParseError("expected variable", pos_);
    std::size_t start = pos_;
    ++pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto it = var_index_.find(name);
    if (it != var_index_.end()) return it->second;
    if (explicit_vars_) throw ParseError("unknown variable '" + name + "'", at);
    var_index_[name] = vars_.size();
    vars_.push_back(name);
    return vars_.size() - 1;
  }

  // factor := var ['^' posint]
  void parse_factor(std::vector<std::pair<std::size_t, int>>& exps) {
    std::size_t vi = parse_variable();
    int e = 1;
    skip_ws();
    if (!eof() && peek() == '^') {
      get();
      e = parse_exponent();
    }
    exps.emplace_back(vi, e);
  }

  void parse_term(int sign) {
    skip_ws();
    if (eof()) throw ParseError("expected term", pos_);
    Rat coeff(sign);
    std::vector<std::pair<std::size_t, int>> exps;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Int num = parse_integer_digits();
      Int den = 1;
      skip_ws();
      if (!eof() && peek() == '/') {
        get();
        skip_ws();
        std::size_t at = pos_;
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected denominator", pos_);
        den = parse_integer_digits();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coeff *= Rat(num, den);
      coeff.canonicalize();
      skip_ws();
      while (!eof() && peek() == '*') {
        get();
        parse_factor(exps);
        skip_ws();
      }
    } else {
      parse_factor(exps);
      skip_ws();
      while (!eof() && peek() == '*') {
        get();
        parse_factor(exps);
        skip_ws();
      }
    }
    raw_terms_.emplace_back(std::move(exps), std::move(coeff));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool explicit_vars_ = false;
  std::vector<std::string> vars_;
  std::map<std::string, std::size_t> var_index_;
  std::vector<std::pair<std::vector<std::pair<std::size_t, int>>, Rat>> raw_terms_;
};

}  // namespace detail

inline Polynomial parse_polynomial(
    std::string_view text,
    const std::optional<std::vector<std::string>>& variables = std::nullopt) {
  return detail::PolyParser(text, variables).run();
}

}  // namespace mfb
