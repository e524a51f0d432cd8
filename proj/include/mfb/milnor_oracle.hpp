#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "mfb/common.hpp"
#include "mfb/polynomial.hpp"

namespace mfb {

// Verification path for Milnor numbers, independent of the standard-basis
// machinery: linear algebra over Q on the degree-truncated quotient. It
// computes dim P_{<N} / (J + m^N) for the Jacobian ideal J, at N = cap and
// N = cap + 1. Agreement of the two values certifies m^cap lies in the local
// Jacobian ideal (Nakayama), so the common value is the exact Milnor number.
struct OracleResult {
  bool stable = false;
  Int value = 0;  // the dimension at N = cap (exact Milnor number when stable)
};

namespace detail {

inline void enumerate_monomials_below(std::size_t nvars, int cap,
                                      std::vector<Monomial>& out) {
  Monomial m = Monomial::one(nvars);
  // Iterative odometer over exponent vectors with total degree < cap.
  int degree = 0;
  for (;;) {
    out.push_back(m);
    std::size_t i = 0;
    for (; i < nvars; ++i) {
      if (degree < cap - 1) {
        ++m.e[i];
        ++degree;
        break;
      }
      degree -= m.e[i];
      m.e[i] = 0;
    }
    if (i == nvars) return;
  }
}

// Rank of the span of {m * g truncated below cap} by sparse row elimination.
// Rows and pivots are kept as (column, coefficient) lists sorted by column.
inline Int truncated_ideal_rank(const std::vector<Polynomial>& gens, int cap,
                                const std::map<std::vector<int>, int>& column_of) {
  using Row = std::vector<std::pair<int, Rat>>;
  std::unordered_map<int, Row> pivot_rows;
  Int rank = 0;
  const std::size_t nvars = gens.front().var_count();

  auto reduce_and_insert = [&](Row row) {
    while (!row.empty()) {
      auto it = pivot_rows.find(row.front().first);
      if (it == pivot_rows.end()) {
        pivot_rows.emplace(row.front().first, std::move(row));
        ++rank;
        return;
      }
      const Row& p = it->second;
      Rat factor = row.front().second / p.front().second;
      Row next;
      next.reserve(row.size() + p.size());
      std::size_t i = 1, j = 1;  // leading entries cancel by construction
      while (i < row.size() && j < p.size()) {
        if (row[i].first < p[j].first) {
          next.push_back(row[i++]);
        } else if (row[i].first > p[j].first) {
          next.emplace_back(p[j].first, -factor * p[j].second);
          ++j;
        } else {
          Rat c = row[i].second - factor * p[j].second;
          if (c != 0) next.emplace_back(row[i].first, std::move(c));
          ++i, ++j;
        }
      }
      for (; i < row.size(); ++i) next.push_back(row[i]);
      for (; j < p.size(); ++j) next.emplace_back(p[j].first, -factor * p[j].second);
      row = std::move(next);
    }
  };

  std::vector<Monomial> multipliers;
  for (const Polynomial& g : gens) {
    int room = cap - g.min_degree();
    if (room <= 0) continue;
    multipliers.clear();
    enumerate_monomials_below(nvars, room, multipliers);
    for (const Monomial& m : multipliers) {
      Row row;
      for (const auto& t : g.terms()) {
        Monomial prod = t.mono * m;
        if (prod.degree() >= cap) continue;
        row.emplace_back(column_of.at(prod.e), t.coeff);
      }
      if (row.empty()) continue;
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      reduce_and_insert(std::move(row));
    }
  }
  return rank;
}

inline Int truncated_quotient_dimension(const std::vector<Polynomial>& gens, int cap) {
  const std::size_t nvars = gens.front().var_count();
  std::vector<Monomial> columns;
  enumerate_monomials_below(nvars, cap, columns);
  // Column 0 is the degrevlex-largest monomial so elimination walks downward.
  std::sort(columns.begin(), columns.end(), [](const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b, MonomialOrder::kDegrevlex) > 0;
  });
  std::map<std::vector<int>, int> column_of;
  for (std::size_t i = 0; i < columns.size(); ++i)
    column_of[columns[i].e] = static_cast<int>(i);
  Int rank = truncated_ideal_rank(gens, cap, column_of);
  return Int(columns.size()) - rank;
}

}  // namespace detail

inline OracleResult milnor_truncation_oracle(const Polynomial& g, int degree_cap) {
  if (g.is_zero()) throw DegeneracyError("Milnor number of the zero polynomial");
  if (g.has_constant_term())
    throw DegeneracyError("polynomial does not vanish at the origin");
  if (degree_cap < 1) throw std::invalid_argument("degree cap must be positive");
  std::vector<Polynomial> jac;
  for (std::size_t i = 0; i < g.var_count(); ++i) {
    Polynomial d = g.partial_derivative(i);
    if (!d.is_zero()) jac.push_back(std::move(d));
  }
  if (jac.empty()) throw DegeneracyError("vanishing Jacobian");
  OracleResult r;
  r.value = detail::truncated_quotient_dimension(jac, degree_cap);
  Int next = detail::truncated_quotient_dimension(jac, degree_cap + 1);
  r.stable = (r.value == next);
  return r;
}

}  // namespace mfb
