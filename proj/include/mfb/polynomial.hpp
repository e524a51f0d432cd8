#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mfb/common.hpp"
#include "mfb/monomial.hpp"

namespace mfb {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept strictly descending under the active monomial order, so the
// leading term is terms().front(). Changing the order is an explicit resort.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rat coeff;
    bool operator==(const Term& t) const {
      return mono == t.mono && coeff == t.coeff;
    }
  };

  Polynomial() = default;

  static Polynomial zero(std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::kDegrevlex) {
    Polynomial p;
    p.vars_ = std::move(vars);
    p.order_ = order;
    return p;
  }

  static Polynomial constant(std::vector<std::string> vars, const Rat& c,
                             MonomialOrder order = MonomialOrder::kDegrevlex) {
    Polynomial p = zero(std::move(vars), order);
    if (c != 0) p.terms_.push_back({Monomial::one(p.vars_.size()), c});
    return p;
  }

  static Polynomial from_terms(std::vector<std::string> vars,
                               std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::kDegrevlex) {
    Polynomial p = zero(std::move(vars), order);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t var_count() const { return vars_.size(); }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rat& leading_coefficient() const { return leading_term().coeff; }

  // Maximum total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  // Minimum total degree among terms; -1 for the zero polynomial.
  int min_degree() const {
    int d = -1;
    for (const Term& t : terms_) {
      int td = t.mono.degree();
      if (d < 0 || td < d) d = td;
    }
    return d;
  }

  bool has_constant_term() const {
    for (const Term& t : terms_)
      if (t.mono.is_one()) return true;
    return false;
  }

  Polynomial with_order(MonomialOrder order) const {
    Polynomial p = *this;
    if (order != p.order_) {
      p.order_ = order;
      p.sort_terms();
    }
    return p;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (Term& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  Polynomial operator+(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r = zero(vars_, order_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = mono_cmp(terms_[i].mono, o.terms_[j].mono, order_);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        Rat s = terms_[i].coeff + o.terms_[j].coeff;
        if (s != 0) r.terms_.push_back({terms_[i].mono, s});
        ++i, ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    require_same_ring(o);
    std::map<std::vector<int>, Rat> acc;
    for (const Term& a : terms_) {
      for (const Term& b : o.terms_) {
        Monomial m = a.mono * b.mono;
        acc[m.e] += a.coeff * b.coeff;
      }
    }
    Polynomial r = zero(vars_, order_);
    for (auto& [e, c] : acc) {
      if (c != 0) r.terms_.push_back({Monomial{e}, c});
    }
    r.sort_terms();
    return r;
  }

  Polynomial operator*(const Rat& c) const {
    Polynomial r = zero(vars_, order_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.coeff *= c;
    return r;
  }

  // Multiply by a single term; preserves sortedness (order-compatible scaling).
  Polynomial mul_term(const Monomial& m, const Rat& c) const {
    Polynomial r = zero(vars_, order_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  // The polynomial minus its leading term.
  Polynomial tail() const {
    Polynomial r = zero(vars_, order_);
    if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  Polynomial partial_derivative(std::size_t var_index) const {
    if (var_index >= vars_.size())
      throw std::invalid_argument("variable index out of range");
    Polynomial r = zero(vars_, order_);
    for (const Term& t : terms_) {
      int e = t.mono.e[var_index];
      if (e == 0) continue;
      Term d;
      d.mono = t.mono;
      d.mono.e[var_index] = e - 1;
      d.coeff = t.coeff * e;
      r.terms_.push_back(d);
    }
    r.normalize();
    return r;
  }

  // Clear denominators and divide by integer content; leading coefficient
  // becomes positive. Zero stays zero.
  Polynomial primitive() const {
    if (is_zero()) return *this;
    Int den = 1;
    for (const Term& t : terms_) {
      Int d = t.coeff.get_den();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    Int content = 0;
    std::vector<Int> nums;
    nums.reserve(terms_.size());
    for (const Term& t : terms_) {
      Int n = t.coeff.get_num() * (den / t.coeff.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
      nums.push_back(n);
    }
    if (sgn(nums.front()) < 0) content = -content;
    Polynomial r = zero(vars_, order_);
    r.terms_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i)
      r.terms_.push_back({terms_[i].mono, Rat(nums[i] / content)});
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading_coefficient());
  }

  bool operator==(const Polynomial& o) const {
    return vars_ == o.vars_ && order_ == o.order_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Canonical text form; parse(str()) reproduces the polynomial when given
  // the same variable list.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
      Rat c = t.coeff;
      if (first) {
        if (c < 0) {
          out << "-";
          c = -c;
        }
      } else {
        out << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      bool unit_coeff = (c == 1);
      if (!unit_coeff || t.mono.is_one()) out << c.get_str();
      bool printed = !unit_coeff || t.mono.is_one();
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        int e = t.mono.e[i];
        if (e == 0) continue;
        if (printed) out << "*";
        out << vars_[i];
        if (e > 1) out << "^" << e;
        printed = true;
      }
    }
    return out.str();
  }

 private:
  void require_same_ring(const Polynomial& o) const {
    if (vars_ != o.vars_ || order_ != o.order_)
      throw std::invalid_argument("polynomials live in different rings");
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
      return mono_greater(a.mono, b.mono, order_);
    });
  }

  void normalize() {
    for (const Term& t : terms_) {
      if (t.mono.e.size() != vars_.size())
        throw std::invalid_argument("term arity does not match variable list");
    }
    sort_terms();
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    terms_.clear();
    for (Term& t : merged) {
      if (t.coeff != 0) terms_.push_back(std::move(t));
    }
  }

  std::vector<std::string> vars_;
  MonomialOrder order_ = MonomialOrder::kDegrevlex;
  std::vector<Term> terms_;
};

// Homogeneity witness: the common total degree, or nullopt if degrees differ.
// The zero polynomial has no degree and is rejected.
inline std::optional<int> homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) throw DegeneracyError("zero polynomial has no homogeneity degree");
  int d = p.terms().front().mono.degree();
  for (const auto& t : p.terms())
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

// A variable is either sent to an exact rational constant or renamed.
using SubstValue = std::variant<Rat, std::string>;

// Substitute constants / rename variables. The result lives in the remaining
// variables (original order), with renames merged into existing slots when
// they collide.
inline Polynomial substitute(const Polynomial& p,
                             const std::map<std::string, SubstValue>& assignments) {
  const auto& vars = p.variables();
  for (const auto& [name, _] : assignments) {
    if (std::find(vars.begin(), vars.end(), name) == vars.end())
      throw std::invalid_argument("substitution for unknown variable: " + name);
  }
  // Build the target variable list: kept variables keep their slot (under a
  // possibly new name); constants drop out.
  std::vector<std::string> out_vars;
  std::vector<int> slot(vars.size(), -1);  // -1 means "assigned to a constant"
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = assignments.find(vars[i]);
    std::string target = vars[i];
    if (it != assignments.end()) {
      if (std::holds_alternative<Rat>(it->second)) continue;
      target = std::get<std::string>(it->second);
    }
    auto pos = std::find(out_vars.begin(), out_vars.end(), target);
    if (pos == out_vars.end()) {
      slot[i] = static_cast<int>(out_vars.size());
      out_vars.push_back(target);
    } else {
      slot[i] = static_cast<int>(pos - out_vars.begin());
    }
  }
  std::vector<Polynomial::Term> out_terms;
  for (const auto& t : p.terms()) {
    Rat c = t.coeff;
    Monomial m = Monomial::one(out_vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      int e = t.mono.e[i];
      if (e == 0) continue;
      if (slot[i] >= 0) {
        m.e[slot[i]] += e;
      } else {
        const Rat& v = std::get<Rat>(assignments.at(vars[i]));
        Rat pow;
        mpz_pow_ui(pow.get_num_mpz_t(), v.get_num().get_mpz_t(), e);
        mpz_pow_ui(pow.get_den_mpz_t(), v.get_den().get_mpz_t(), e);
        pow.canonicalize();
        c *= pow;
      }
    }
    if (c != 0) out_terms.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(std::move(out_vars), std::move(out_terms), p.order());
}

}  // namespace mfb
