#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mfb/common.hpp"
#include "mfb/int_polynomial.hpp"

namespace mfb {

class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {
    if (n == 0) throw std::invalid_argument("matrix must be at least 1x1");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw std::invalid_argument("matrix rows must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t size() const { return n_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("size mismatch");
    IntMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        const Int& aik = at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }

  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

 private:
  std::size_t n_;
  std::vector<Int> a_;
};

// Fraction-free Gaussian elimination (Bareiss); all divisions are exact.
inline Int determinant(IntMatrix m) {
  const std::size_t n = m.size();
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

// det(xI - A), monic of degree n: evaluated at x = 0..n with fraction-free
// determinants, then recovered by exact Newton interpolation over Q.
inline IntPolynomial charpoly_exact(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Int> points(n + 1), values(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = (i == j) ? Int(Int(t) - a.at(i, j)) : Int(-a.at(i, j));
    points[t] = Int(t);
    values[t] = determinant(m);
  }
  // Divided differences; denominators clear because the interpolant is in Z[x].
  std::vector<Rat> dd(values.begin(), values.end());
  for (std::size_t level = 1; level <= n; ++level) {
    for (std::size_t i = n; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i] - points[i - level]);
      if (i == level) break;
    }
  }
  // Expand the Newton form into monomial coefficients.
  std::vector<Rat> coeffs(n + 1, Rat(0));
  std::vector<Rat> basis{Rat(1)};  // running product (x - x_0)...(x - x_{k-1})
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += dd[k] * basis[i];
    if (k < n) {
      basis.push_back(Rat(0));
      for (std::size_t i = basis.size() - 1; i > 0; --i)
        basis[i] = basis[i - 1] - Rat(points[k]) * basis[i];
      basis[0] = -Rat(points[k]) * basis[0];
    }
  }
  std::vector<Int> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs[i].get_den() != 1) throw std::logic_error("interpolation not integral");
    out[i] = coeffs[i].get_num();
  }
  return IntPolynomial(std::move(out));
}

inline IntMatrix matrix_mod(const IntMatrix& a, const Int& p) {
  IntMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      mpz_fdiv_r(r.at(i, j).get_mpz_t(), a.at(i, j).get_mpz_t(), p.get_mpz_t());
  return r;
}

inline IntMatrix matrix_power(IntMatrix base, Int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  IntMatrix result = IntMatrix::identity(base.size());
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) result = result * base;
    exp >>= 1;
    if (exp > 0) base = base * base;
  }
  return result;
}

inline IntMatrix matrix_power_mod(IntMatrix base, Int exp, const Int& p) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  base = matrix_mod(base, p);
  IntMatrix result = IntMatrix::identity(base.size());
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) result = matrix_mod(result * base, p);
    exp >>= 1;
    if (exp > 0) base = matrix_mod(base * base, p);
  }
  return result;
}

// Exact inverse of a matrix with determinant +/-1, via the adjugate.
inline IntMatrix inverse_unimodular(const IntMatrix& a) {
  const std::size_t n = a.size();
  Int det = determinant(a);
  if (det != 1 && det != -1)
    throw DegeneracyError("matrix determinant is not a unit");
  IntMatrix inv(n);
  if (n == 1) {
    inv.at(0, 0) = det;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = a.at(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(j, i) = cof * det;  // adjugate transposed, divided by det = +/-1
    }
  }
  return inv;
}

inline Int matrix_trace(const IntMatrix& a) {
  Int t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a.at(i, i);
  return t;
}

// Text format: first line the size n, then n rows of n integers.
inline IntMatrix parse_matrix(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 1 || n > 512) throw ParseError("invalid matrix size", 0);
  IntMatrix m(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      std::string token;
      if (!(in >> token)) throw ParseError("matrix entries missing", 0);
      try {
        m.at(i, j) = Int(token, 10);
      } catch (const std::invalid_argument&) {
        throw ParseError("invalid matrix entry '" + token + "'", 0);
      }
    }
  }
  return m;
}

}  // namespace mfb
