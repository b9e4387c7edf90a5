#pragma once

// Division, S-polynomials and Buchberger's algorithm.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hessex/polycore.hpp"

namespace hessex {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuchbergerOptions {
  std::uint64_t pair_budget = 1'000'000;
  /// Pairs reduced concurrently per batch; 1 is the sequential engine.
  int threads = 1;
};

struct GroebnerStats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_skipped_coprime = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
};

struct GroebnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order = MonomialOrder::lex_default();
  bool reduced = false;
  GroebnerStats stats;

  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
  /// remainder == 0 and LM(q_i g_i) <= LM(f) for every nonzero q_i g_i.
  bool standard = false;
};

Polynomial s_polynomial(const Polynomial& f1, const Polynomial& f2, const MonomialOrder& ord);

/// Multivariate division; at each step the first divisor (in list order)
/// whose leading monomial divides the current lead is used.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord);

/// Whether division of f by G in list order yields a standard representation
/// of f. This is one fixed division; a standard representation found by
/// some other reduction path is not searched for.
bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& ord);

/// Reduced Groebner basis. Pairs are taken smallest lcm first; pairs with
/// coprime leading monomials are skipped. Throws BudgetExceeded once more
/// than `pair_budget` pairs have been considered.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                         const BuchbergerOptions& opts = {});

/// Buchberger's criterion: every S-pair of G reduces to zero modulo G.
bool is_groebner_basis(const std::vector<Polynomial>& G, const MonomialOrder& ord);

/// Fully reduced remainder of f modulo a Groebner basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

}  // namespace hessex
