#pragma once

#include <map>
#include <set>
#include <vector>

#include "mfb/common.hpp"
#include "mfb/cyclotomic.hpp"
#include "mfb/instance.hpp"
#include "mfb/int_matrix.hpp"
#include "mfb/int_polynomial.hpp"

namespace mfb {

// Fermat-kernel congruence: char_A and char_{A^{p^m}} agree coefficientwise
// mod p. Both sides only depend on A mod p, so the computation reduces first.
inline bool charpoly_mod_p_power_identity(const IntMatrix& a, const Int& p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  if (m < 1) throw std::invalid_argument("exponent m must be positive");
  Int pm;
  mpz_pow_ui(pm.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(m));
  IntMatrix reduced = matrix_mod(a, p);
  IntMatrix powered = matrix_power_mod(reduced, pm, p);
  IntPolynomial lhs = charpoly_exact(reduced).reduced_mod(p);
  IntPolynomial rhs = charpoly_exact(powered).reduced_mod(p);
  return lhs == rhs;
}

// Q = (T^{-1})^d for a monodromy matrix T with unit determinant: the internal
// monodromy of the Milnor fibration restricted to a degree-d slice direction.
inline IntMatrix internal_from_milnor(const IntMatrix& t, int d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  return matrix_power(inverse_unimodular(t), Int(d));
}

// Quasi-unipotence: q factors completely into cyclotomic polynomials.
// Trial division by Phi_k for every k with phi(k) <= deg q; indices up to
// 2*deg(q)^2 + 1 cover all admissible k. factors maps k to multiplicity.
struct CyclotomicFactorization {
  bool quasiunipotent = false;
  std::map<unsigned, int> factors;
};

inline CyclotomicFactorization is_quasiunipotent(const IntPolynomial& q) {
  if (q.is_zero() || !q.is_monic()) throw std::invalid_argument("input must be monic");
  if (q.coeff(0) == 0) throw std::invalid_argument("zero constant term");
  CyclotomicFactorization out;
  IntPolynomial rest = q;
  const unsigned original_degree = static_cast<unsigned>(q.degree());
  const unsigned limit = 2 * original_degree * original_degree + 1;
  for (unsigned k = 1; k <= limit && rest.degree() > 0; ++k) {
    if (euler_phi(k) > static_cast<unsigned>(rest.degree())) continue;
    const IntPolynomial& phi = cyclotomic_polynomial(k);
    for (;;) {
      auto [quot, rem] = rest.divmod_monic(phi);
      if (!rem.is_zero()) break;
      rest = quot;
      out.factors[k] += 1;
      if (rest.degree() < 1) break;
    }
  }
  out.quasiunipotent = rest.is_one();
  if (!out.quasiunipotent) out.factors.clear();
  return out;
}

// For monic q with q(0) = +/-1 that splits into cyclotomics, the companion
// matrix's inverse has the same characteristic polynomial; concretely
// q(x) = (-x)^deg * q(1/x) / q(0), i.e. c_j * c_0 = c_{deg-j} for all j.
// Inputs failing the hypotheses are rejected, not answered.
inline bool charpoly_inverse_invariance(const IntPolynomial& q) {
  if (q.is_zero() || !q.is_monic()) throw std::invalid_argument("input must be monic");
  const Int& c0 = q.coeff(0);
  if (c0 != 1 && c0 != -1)
    throw std::invalid_argument("constant term must be a unit");
  if (!is_quasiunipotent(q).quasiunipotent)
    throw std::invalid_argument("input is not quasi-unipotent");
  const int n = q.degree();
  for (int j = 0; j <= n; ++j) {
    if (q.coeff(j) * c0 != q.coeff(n - j)) return false;
  }
  return true;
}

struct DegreeTrace {
  int degree = 0;
  Int trace;
};

// Alternating sum of traces over cohomological degrees.
inline Int lefschetz_number(const std::vector<DegreeTrace>& traces) {
  std::set<int> seen;
  bool has_zero = false;
  Int total = 0;
  for (const DegreeTrace& t : traces) {
    if (t.degree < 0) throw std::invalid_argument("negative degree");
    if (!seen.insert(t.degree).second)
      throw std::invalid_argument("duplicate cohomological degree");
    if (t.degree == 0) has_zero = true;
    total += (t.degree % 2 == 0) ? t.trace : -t.trace;
  }
  if (!has_zero) throw std::invalid_argument("degree 0 trace is required");
  return total;
}

inline bool lefschetz_divisibility_check(const std::vector<DegreeTrace>& traces,
                                         const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  return lefschetz_number(traces) % p == 0;
}

// A quasi-unipotent operator on Z^mu with integer trace has at most
// floor((mu + trace) / 2) eigenvalues equal to 1: every non-real eigenvalue
// pairs with its conjugate and each real eigenvalue is +/-1.
inline Int eigenvalue_one_bound(const Int& mu, const Int& trace) {
  if (mu < 0) throw std::invalid_argument("rank must be non-negative");
  if (trace > mu || trace < -mu)
    throw std::invalid_argument("trace exceeds rank in absolute value");
  return (mu + trace) / 2;
}

}  // namespace mfb
