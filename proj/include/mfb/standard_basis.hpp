#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "mfb/common.hpp"
#include "mfb/groebner.hpp"
#include "mfb/polynomial.hpp"

namespace mfb {

// ecart = total degree minus degree of the leading monomial; non-negative
// under the local order, where the leading monomial has minimal degree.
inline int ecart(const Polynomial& p) {
  return p.total_degree() - p.leading_monomial().degree();
}

// Mora's weak normal form with the ecart selection rule. Intermediate
// remainders with larger ecart join the reducer set, which is what makes the
// division terminate under the local order. The result is 0 or has a leading
// monomial not divisible by any reducer's leading monomial (up to a unit).
inline Polynomial mora_normal_form(Polynomial h, std::vector<Polynomial> reducers,
                                   Budget& budget) {
  while (!h.is_zero()) {
    int best = -1;
    int best_ecart = 0;
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      if (!reducers[k].leading_monomial().divides(h.leading_monomial())) continue;
      int ek = ecart(reducers[k]);
      if (best < 0 || ek < best_ecart) {
        best = static_cast<int>(k);
        best_ecart = ek;
      }
    }
    if (best < 0) return h;
    budget.charge();
    if (best_ecart > ecart(h)) reducers.push_back(h);
    const Polynomial& g = reducers[best];
    Monomial q = h.leading_monomial() / g.leading_monomial();
    Rat c = h.leading_coefficient() / g.leading_coefficient();
    h = h - g.mul_term(q, c);
  }
  return h;
}

// Standard basis of the ideal generated by gens in the local ring at the
// origin, under the negative degrevlex order. Buchberger pair loop with Mora
// reduction; the product criterion is not applied (invalid for local orders).
inline std::vector<Polynomial> standard_basis(const std::vector<Polynomial>& gens,
                                              Budget& budget) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    basis.push_back(g.with_order(MonomialOrder::kNegDegrevlex).primitive());
  }
  if (basis.empty()) throw std::invalid_argument("empty generator list");

  std::set<detail::PairEntry, detail::PairCmp> pairs{
      detail::PairCmp{MonomialOrder::kNegDegrevlex}};
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      pairs.insert({l.degree(), l, i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    detail::PairEntry e = *pairs.begin();
    pairs.erase(pairs.begin());
    budget.charge();
    Polynomial s = spoly(basis[e.i], basis[e.j]);
    if (s.is_zero()) continue;
    s = mora_normal_form(s, basis, budget);
    if (s.is_zero()) continue;
    basis.push_back(s.primitive());
    push_pairs(basis.size() - 1);
  }
  return basis;
}

// The staircase of a leading ideal: its minimal monomial generators and the
// count of standard monomials (monomials divisible by no generator). The
// count is finite exactly when every variable carries a pure power corner.
struct Staircase {
  bool finite = false;
  std::vector<Monomial> corners;
  Int count = 0;
};

inline Staircase staircase_from_leading(std::vector<Monomial> lms, std::size_t nvars) {
  Staircase st;
  // Minimal generators only.
  std::sort(lms.begin(), lms.end(),
            [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
  lms.erase(std::unique(lms.begin(), lms.end()), lms.end());
  for (const Monomial& m : lms) {
    bool redundant = false;
    for (const Monomial& other : lms) {
      if (other != m && other.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) st.corners.push_back(m);
  }

  for (const Monomial& m : st.corners) {
    if (m.is_one()) {  // unit ideal: empty staircase
      st.finite = true;
      st.count = 0;
      return st;
    }
  }

  // A pure power per variable caps the staircase box.
  std::vector<int> caps(nvars, -1);
  for (const Monomial& m : st.corners) {
    int support_var = -1;
    bool pure = true;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (m.e[i] > 0) {
        if (support_var >= 0) {
          pure = false;
          break;
        }
        support_var = static_cast<int>(i);
      }
    }
    if (pure && support_var >= 0) {
      int& cap = caps[support_var];
      cap = (cap < 0) ? m.e[support_var] : std::min(cap, m.e[support_var]);
    }
  }
  for (std::size_t i = 0; i < nvars; ++i) {
    if (caps[i] < 0) {
      st.finite = false;
      return st;  // an unbounded staircase direction
    }
  }
  st.finite = true;

  // Inclusion-exclusion over the non-pure corners; every minimal non-pure
  // corner sits strictly inside the box, pure corners contribute zero volume.
  std::vector<Monomial> inner;
  for (const Monomial& m : st.corners) {
    bool pure = false;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (m.e[i] > 0 && m.e[i] >= caps[i]) pure = true;
    }
    if (!pure) inner.push_back(m);
  }
  if (inner.size() > 25) throw ResourceLimitError("staircase has too many corners");
  const std::size_t k = inner.size();
  Int total = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
    Monomial l = Monomial::one(nvars);
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ULL << i)) l = lcm(l, inner[i]);
    Int vol = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
      int side = caps[i] - l.e[i];
      if (side <= 0) {
        vol = 0;
        break;
      }
      vol *= side;
    }
    if (__builtin_popcountll(mask) % 2 == 0)
      total += vol;
    else
      total -= vol;
  }
  st.count = total;
  return st;
}

struct MilnorResult {
  bool finite = false;
  Int value = 0;  // meaningful only when finite
};

// Milnor number of g at the origin: the dimension of the local quotient by
// the Jacobian ideal, computed as the standard-monomial count below the
// leading ideal of a local standard basis. Infinite staircase means the
// singular locus of g has positive dimension at the origin.
inline MilnorResult milnor_number_at_origin(const Polynomial& g, Budget& budget) {
  if (g.is_zero()) throw DegeneracyError("Milnor number of the zero polynomial");
  if (g.has_constant_term())
    throw DegeneracyError("polynomial does not vanish at the origin");
  std::vector<Polynomial> jac;
  for (std::size_t i = 0; i < g.var_count(); ++i) {
    Polynomial d = g.partial_derivative(i);
    if (!d.is_zero()) jac.push_back(std::move(d));
  }
  if (jac.empty()) throw DegeneracyError("vanishing Jacobian");
  std::vector<Polynomial> sb = standard_basis(jac, budget);
  std::vector<Monomial> lms;
  lms.reserve(sb.size());
  for (const Polynomial& p : sb) lms.push_back(p.leading_monomial());
  Staircase st = staircase_from_leading(std::move(lms), g.var_count());
  MilnorResult r;
  r.finite = st.finite;
  if (st.finite) r.value = st.count;
  return r;
}

}  // namespace mfb
