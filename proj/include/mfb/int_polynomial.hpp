#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mfb/common.hpp"

namespace mfb {

// Dense univariate polynomial over Z; coefficients ascending, no trailing
// zeros (the zero polynomial has an empty coefficient list).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(Int v) { return IntPolynomial({std::move(v)}); }

  static IntPolynomial monomial(int degree, Int coeff = 1) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<Int> c(degree + 1, 0);
    c[degree] = std::move(coeff);
    return IntPolynomial(std::move(c));
  }

  // x^k - 1
  static IntPolynomial power_minus_one(unsigned k) {
    std::vector<Int> c(k + 1, 0);
    c[0] = -1;
    c[k] = 1;
    return IntPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  const Int& coeff(int i) const {
    static const Int kZero = 0;
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
  }
  const std::vector<Int>& coefficients() const { return c_; }

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return IntPolynomial(std::move(c));
  }

  IntPolynomial operator-(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return IntPolynomial(std::move(c));
  }

  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(c));
  }

  // Division with remainder by a monic divisor; stays in Z.
  std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& div) const {
    if (!div.is_monic()) throw std::invalid_argument("divisor must be monic");
    std::vector<Int> rem = c_;
    std::vector<Int> quot;
    int dd = div.degree();
    while (static_cast<int>(rem.size()) - 1 >= dd) {
      Int lead = rem.back();
      int shift = static_cast<int>(rem.size()) - 1 - dd;
      if (static_cast<int>(quot.size()) < shift + 1) quot.resize(shift + 1, 0);
      quot[shift] = lead;
      for (int i = 0; i <= dd; ++i) rem[shift + i] -= lead * div.c_[i];
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      if (rem.empty()) break;
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
  }

  bool divisible_by(const IntPolynomial& div) const {
    return divmod_monic(div).second.is_zero();
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Coefficients reduced into [0, p).
  IntPolynomial reduced_mod(const Int& p) const {
    std::vector<Int> c = c_;
    for (Int& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return IntPolynomial(std::move(c));
  }

  // x^deg * p(1/x): the coefficient list reversed.
  IntPolynomial reversal() const {
    std::vector<Int> c(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(c));
  }

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      Int a = c_[i];
      if (first) {
        if (a < 0) {
          out << "-";
          a = -a;
        }
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (a != 1 || i == 0) out << a.get_str();
      if (i > 0) {
        if (a != 1) out << "*";
        out << var;
        if (i > 1) out << "^" << i;
      }
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

}  // namespace mfb
