#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "mfb/common.hpp"
#include "mfb/polynomial.hpp"

namespace mfb {

struct IdealBasis {
  std::vector<Polynomial> generators;
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::kDegrevlex;
  bool reduced = false;
};

// Full normal form under a global order: the remainder of multivariate
// division, with every term of the result irreducible modulo the leading
// terms of the reducers.
inline Polynomial normal_form(Polynomial h, const std::vector<Polynomial>& gens) {
  if (h.is_zero()) return h;
  Polynomial r = Polynomial::zero(h.variables(), h.order());
  while (!h.is_zero()) {
    bool reduced_step = false;
    for (const Polynomial& g : gens) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(h.leading_monomial())) {
        Monomial q = h.leading_monomial() / g.leading_monomial();
        Rat c = h.leading_coefficient() / g.leading_coefficient();
        h = h - g.mul_term(q, c);
        reduced_step = true;
        break;
      }
    }
    if (!reduced_step) {
      Polynomial lt = Polynomial::from_terms(h.variables(), {h.leading_term()}, h.order());
      r = r + lt;
      h = h.tail();
    }
  }
  return r;
}

inline Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), Rat(1) / f.leading_coefficient()) -
         g.mul_term(l / g.leading_monomial(), Rat(1) / g.leading_coefficient());
}

namespace detail {

struct PairEntry {
  int lcm_degree;
  Monomial l;
  std::size_t i, j;
};

struct PairCmp {
  MonomialOrder order;
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
    int c = mono_cmp(a.l, b.l, order);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace detail

// Buchberger's algorithm under a global order, returning the reduced basis:
// pairwise non-divisible leading terms, fully reduced tails, primitive integer
// coefficients with positive leading sign, generators sorted ascending.
// Idempotent: rerunning on its own output returns a structurally equal basis.
inline IdealBasis groebner_basis(std::vector<Polynomial> gens, MonomialOrder order,
                                 Budget& budget) {
  if (!is_global(order))
    throw std::invalid_argument("groebner_basis requires a global order");
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  std::vector<Polynomial> basis;
  for (Polynomial& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    basis.push_back(g.with_order(order).primitive());
  }
  std::vector<std::string> variables = basis.front().variables();

  std::set<detail::PairEntry, detail::PairCmp> pairs{detail::PairCmp{order}};
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
    // Buchberger's product criterion (valid for global orders only).
    if (coprime(basis[e.i].leading_monomial(), basis[e.j].leading_monomial()))
      continue;
    Polynomial s = normal_form(spoly(basis[e.i], basis[e.j]), basis);
    if (s.is_zero()) continue;
    basis.push_back(s.primitive());
    push_pairs(basis.size() - 1);
  }

  // Minimalize: drop generators whose leading monomial another one divides.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &mi = basis[i].leading_monomial(), &mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Tail-reduce each survivor against the others.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normal_form(minimal[i], others).primitive());
  }
  std::sort(reduced.begin(), reduced.end(), [order](const Polynomial& a, const Polynomial& b) {
    return mono_cmp(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  return IdealBasis{std::move(reduced), std::move(variables), order, true};
}

}  // namespace mfb
