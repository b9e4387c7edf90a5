#include "hessex/groebner.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <tuple>

namespace hessex {

namespace {

Polynomial to_space(const Polynomial& p, const MonomialOrder& ord) {
  return p.map_monomials([&](const Monomial& m) { return ord.to_order_space(m); });
}

Polynomial from_space(const Polynomial& p, const MonomialOrder& ord) {
  return p.map_monomials([&](const Monomial& m) { return ord.from_order_space(m); });
}

// A basis element in order space: terms descending, so terms()[0] leads.
struct Elem {
  Polynomial poly;
  Monomial lm;
  std::uint64_t lm_support = 0;
};

Elem make_elem(Polynomial p) {
  Elem e;
  Rational lc = p.head().coef;
  if (lc != 1) p = p.scale(1 / lc);
  e.lm = p.head().mono;
  e.lm_support = e.lm.support();
  e.poly = std::move(p);
  return e;
}

int find_divisor(const std::vector<Elem>& basis, const Monomial& m, std::uint64_t msupp,
                 std::size_t skip = SIZE_MAX) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == skip) continue;
    const Elem& g = basis[k];
    if ((g.lm_support & ~msupp) == 0 && g.lm.divides(m)) return static_cast<int>(k);
  }
  return -1;
}

// cur[start..] -= c * m * g, where the result's first term is known to cancel.
void subtract_tail(std::vector<Term>& cur, std::size_t start, const Rational& c, const Monomial& m,
                   const Polynomial& g) {
  const auto& b = g.terms();
  std::vector<Term> out;
  out.reserve(cur.size() - start + b.size());
  std::size_t i = start, j = 0;
  Monomial bm;
  bool have_b = false;
  auto load_b = [&] {
    have_b = j < b.size();
    if (have_b) bm = b[j].mono * m;
  };
  load_b();
  while (i < cur.size() && have_b) {
    auto cmp = cur[i].mono <=> bm;
    if (cmp > 0) {
      out.push_back(std::move(cur[i++]));
    } else if (cmp < 0) {
      out.push_back({-(c * b[j].coef), bm});
      ++j;
      load_b();
    } else {
      cur[i].coef -= c * b[j].coef;
      if (cur[i].coef != 0) out.push_back(std::move(cur[i]));
      ++i;
      ++j;
      load_b();
    }
  }
  for (; i < cur.size(); ++i) out.push_back(std::move(cur[i]));
  while (have_b) {
    out.push_back({-(c * b[j].coef), bm});
    ++j;
    load_b();
  }
  cur.resize(start);
  cur.reserve(start + out.size());
  for (auto& t : out) cur.push_back(std::move(t));
}

// Full reduction of p modulo basis (order space, all elements monic).
Polynomial reduce_full(const Polynomial& p, const std::vector<Elem>& basis, std::size_t skip = SIZE_MAX) {
  std::vector<Term> cur = p.terms();
  std::size_t k = 0;
  while (k < cur.size()) {
    const Monomial& m = cur[k].mono;
    int d = find_divisor(basis, m, m.support(), skip);
    if (d < 0) {
      ++k;
      continue;
    }
    const Elem& g = basis[d];
    Rational c = cur[k].coef;
    Monomial q = m / g.lm;
    subtract_tail(cur, k, c, q, g.poly);
  }
  return Polynomial::from_sorted_terms(std::move(cur));
}

Polynomial s_poly_space(const Polynomial& f, const Polynomial& g) {
  const Term& a = f.head();
  const Term& b = g.head();
  Monomial l = a.mono.lcm(b.mono);
  Polynomial left = f.mul_term(1 / a.coef, l / a.mono);
  return left.sub_mul(1 / b.coef, l / b.mono, g);
}

struct Pair {
  Monomial lcm;
  std::size_t i, j;  // i < j
  bool operator<(const Pair& o) const {
    // Smallest lcm first; ties by the later element, then the earlier.
    if (!(lcm == o.lcm)) return lcm < o.lcm;
    return std::tie(j, i) < std::tie(o.j, o.i);
  }
};

std::vector<Elem> reduce_basis(std::vector<Elem> basis) {
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<Elem> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      if (basis[b].lm.divides(basis[a].lm) && (!(basis[b].lm == basis[a].lm) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  std::vector<Elem> out;
  out.reserve(minimal.size());
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    // The leading term is irreducible by the others, so only the tail moves.
    Polynomial r = reduce_full(minimal[a].poly, minimal, a);
    out.push_back(make_elem(std::move(r)));
  }
  std::sort(out.begin(), out.end(), [](const Elem& x, const Elem& y) { return x.lm > y.lm; });
  return out;
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : generators) out.push_back(g.leading_monomial(order));
  return out;
}

bool GroebnerBasis::is_unit() const {
  return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero();
}

Polynomial s_polynomial(const Polynomial& f1, const Polynomial& f2, const MonomialOrder& ord) {
  if (f1.is_zero() || f2.is_zero()) throw DomainError("S-polynomial of zero");
  return from_space(s_poly_space(to_space(f1, ord), to_space(f2, ord)), ord);
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& ord) {
  std::vector<Polynomial> gs;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    gs.push_back(to_space(g, ord));
  }
  std::vector<std::vector<Term>> q(gs.size());
  std::vector<Term> rem;
  std::vector<Term> cur = to_space(f, ord).terms();
  std::size_t k = 0;
  while (k < cur.size()) {
    const Monomial& m = cur[k].mono;
    int d = -1;
    for (std::size_t a = 0; a < gs.size(); ++a)
      if (gs[a].head().mono.divides(m)) {
        d = static_cast<int>(a);
        break;
      }
    if (d < 0) {
      ++k;
      continue;
    }
    Rational c = cur[k].coef / gs[d].head().coef;
    Monomial mq = m / gs[d].head().mono;
    q[d].push_back({c, mq});
    subtract_tail(cur, k, c, mq, gs[d]);
  }
  DivisionResult res;
  Polynomial fs = to_space(f, ord);
  res.remainder = from_space(Polynomial::from_sorted_terms(std::move(cur)), ord);
  res.standard = res.remainder.is_zero();
  for (std::size_t a = 0; a < gs.size(); ++a) {
    // Quotient terms were emitted in strictly decreasing order.
    Polynomial qa = Polynomial::from_sorted_terms(std::move(q[a]));
    if (!qa.is_zero() && !fs.is_zero()) {
      Monomial lead = qa.head().mono * gs[a].head().mono;
      if (lead > fs.head().mono) res.standard = false;
    }
    res.quotients.push_back(from_space(qa, ord));
  }
  return res;
}

bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& ord) {
  if (f.is_zero()) return true;
  if (G.empty()) return false;
  return divide(f, G, ord).standard;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                         const BuchbergerOptions& opts) {
  GroebnerBasis out;
  out.order = ord;
  out.reduced = true;

  std::vector<Elem> basis;
  std::set<Pair> pairs;
  auto add = [&](Polynomial p) {
    basis.push_back(make_elem(std::move(p)));
    std::size_t j = basis.size() - 1;
    for (std::size_t i = 0; i < j; ++i) pairs.insert({basis[i].lm.lcm(basis[j].lm), i, j});
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial r = reduce_full(to_space(g, ord), basis);
    if (!r.is_zero()) add(std::move(r));
  }

  auto& st = out.stats;
  int threads = std::max(1, opts.threads);
  while (!pairs.empty()) {
    if (basis.size() && basis.back().lm.is_one()) break;  // unit ideal
    std::vector<Pair> batch;
    while (!pairs.empty() && static_cast<int>(batch.size()) < threads) {
      Pair p = *pairs.begin();
      pairs.erase(pairs.begin());
      if (++st.pairs_considered > opts.pair_budget)
        throw BudgetExceeded("S-pair budget of " + std::to_string(opts.pair_budget) + " exceeded");
      if (basis[p.i].lm.coprime(basis[p.j].lm)) {
        ++st.pairs_skipped_coprime;
        continue;
      }
      batch.push_back(p);
    }
    if (batch.empty()) continue;
    std::vector<Polynomial> reduced(batch.size());
    if (batch.size() == 1) {
      reduced[0] = reduce_full(s_poly_space(basis[batch[0].i].poly, basis[batch[0].j].poly), basis);
    } else {
      std::vector<std::future<Polynomial>> jobs;
      for (const auto& p : batch)
        jobs.push_back(std::async(std::launch::async, [&basis, p] {
          return reduce_full(s_poly_space(basis[p.i].poly, basis[p.j].poly), basis);
        }));
      for (std::size_t k = 0; k < jobs.size(); ++k) reduced[k] = jobs[k].get();
    }
    for (auto& r : reduced) {
      ++st.pairs_reduced;
      // Elements added earlier in this batch may reduce r further.
      if (!r.is_zero()) r = reduce_full(r, basis);
      if (r.is_zero()) {
        ++st.zero_reductions;
        continue;
      }
      add(std::move(r));
    }
  }

  for (auto& e : reduce_basis(std::move(basis))) out.generators.push_back(from_space(e.poly, ord));
  return out;
}

bool is_groebner_basis(const std::vector<Polynomial>& G, const MonomialOrder& ord) {
  std::vector<Polynomial> gs;
  for (const auto& g : G)
    if (!g.is_zero()) gs.push_back(g);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (gs[i].leading_monomial(ord).coprime(gs[j].leading_monomial(ord))) continue;
      if (!divide(s_polynomial(gs[i], gs[j], ord), gs, ord).remainder.is_zero()) return false;
    }
  return true;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  std::vector<Elem> basis;
  for (const auto& g : gb.generators) basis.push_back(make_elem(to_space(g, gb.order)));
  return from_space(reduce_full(to_space(f, gb.order), basis), gb.order);
}

}  // namespace hessex
