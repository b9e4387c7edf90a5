#pragma once

// Shared helpers for the unit and property tests: seeded random polynomials
// and shorthands for the polynomials that recur in the fixtures.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "hessex/verify.hpp"

namespace testing_support {

using namespace hessex;

inline Polynomial P(const std::string& s) { return Polynomial::parse(s); }
inline Polynomial z(int i, int j) { return Polynomial::z(i, j); }
inline Polynomial t() { return Polynomial::t(); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240917);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random monomial in the given variables with each exponent in [0, max_exp].
inline Monomial random_monomial(const std::vector<Variable>& vars, int max_exp) {
  Monomial m;
  for (const auto& v : vars) m.set_exponent(v.slot(), uniform(0, max_exp));
  return m;
}

/// Random polynomial with up to `terms` terms of bounded exponent and small
/// integer coefficients.
inline Polynomial random_poly(const std::vector<Variable>& vars, int terms, int max_exp) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    int c = uniform(-3, 3);
    if (c == 0) c = 1;
    ts.push_back({Rational(c), random_monomial(vars, max_exp)});
  }
  return Polynomial::from_terms(std::move(ts));
}

inline std::vector<Variable> z_vars(int n) {
  std::vector<Variable> v;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) v.push_back(Variable::z(i, j));
  return v;
}

/// Every order kind the library offers, sized for n.
inline std::vector<MonomialOrder> all_order_kinds(int n) {
  std::vector<int> rows(n), rev(n);
  for (int k = 0; k < n; ++k) rows[k] = k + 1, rev[k] = n - k;
  return {MonomialOrder::lex_default(), MonomialOrder::elimination(n), MonomialOrder::diagonal_twist(n, rows),
          MonomialOrder::diagonal_twist(n, rev),
          MonomialOrder::lex({Variable::z(n, n), Variable::t(), Variable::z(1, 2)})};
}

}  // namespace testing_support
