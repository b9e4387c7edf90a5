#include "hessex/idealops.hpp"

#include <algorithm>
#include <bit>

namespace hessex {

namespace {

std::mutex g_options_mu;
BuchbergerOptions g_options;
// 0 means no thread-local cap.
thread_local std::uint64_t t_budget_cap = 0;

std::uint64_t ring_mask(const Ring& r) {
  std::uint64_t m = 0;
  for (const auto& v : r.variables()) m |= std::uint64_t(1) << v.slot();
  return m;
}

void require_same_ring(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw DomainError("ideals live in different rings");
}

Ring without(Ring r, const std::vector<Variable>& drop) {
  for (const auto& v : drop) {
    if (v.kind == Variable::Kind::T) r.has_t = false;
    if (v.kind == Variable::Kind::S) r.has_s = false;
    if (v.kind == Variable::Kind::Aux) r.has_aux = false;
  }
  return r;
}

}  // namespace

void set_engine_options(const BuchbergerOptions& opts) {
  std::lock_guard lock(g_options_mu);
  g_options = opts;
}

BuchbergerOptions engine_options() {
  std::lock_guard lock(g_options_mu);
  BuchbergerOptions o = g_options;
  if (t_budget_cap) o.pair_budget = std::min(o.pair_budget, t_budget_cap);
  return o;
}

ScopedPairBudget::ScopedPairBudget(std::uint64_t budget) : saved_(t_budget_cap) {
  t_budget_cap = saved_ ? std::min(saved_, budget) : budget;
}

ScopedPairBudget::~ScopedPairBudget() { t_budget_cap = saved_; }

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(ring) {
  ring_.validate();
  std::uint64_t mask = ring_mask(ring_);
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.support() & ~mask)
      throw DomainError("generator " + g.to_string() + " uses a variable outside the ring");
    gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& ord) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->bases.find(ord.key());
    if (it != cache_->bases.end()) return *it->second;
  }
  auto gb = std::make_unique<GroebnerBasis>(buchberger(gens_, ord, engine_options()));
  std::lock_guard lock(cache_->mu);
  // Bases are canonical, so whichever thread inserted first has the same answer.
  auto [it, fresh] = cache_->bases.try_emplace(ord.key(), std::move(gb));
  return *it->second;
}

void Ideal::seed_groebner(GroebnerBasis gb) const {
  std::lock_guard lock(cache_->mu);
  std::string key = gb.order.key();
  cache_->bases.try_emplace(key, std::make_unique<GroebnerBasis>(std::move(gb)));
}

bool Ideal::is_zero_ideal() const { return gens_.empty(); }

bool Ideal::is_unit_ideal() const { return groebner().is_unit(); }

std::string Ideal::to_string() const {
  std::string out = "<";
  for (std::size_t k = 0; k < gens_.size(); ++k) out += (k ? ", " : "") + gens_[k].to_string();
  return out + ">";
}

// ---------------------------------------------------------------- calculus

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<Polynomial> g = I.generators();
  g.insert(g.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<Polynomial> g;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) g.push_back(a * b);
  return Ideal(I.ring(), std::move(g));
}

Ideal eliminate(const Ideal& I, const std::vector<Variable>& drop) {
  MonomialOrder rest = I.default_order();
  MonomialOrder ord = MonomialOrder::elimination(drop, rest);
  const GroebnerBasis& gb = I.groebner(ord);
  std::uint64_t dmask = 0;
  for (const auto& v : drop) dmask |= std::uint64_t(1) << v.slot();
  GroebnerBasis kept;
  kept.order = rest;
  kept.reduced = true;
  for (const auto& g : gb.generators)
    if (!(g.support() & dmask)) kept.generators.push_back(g);
  Ideal out(without(I.ring(), drop), kept.generators);
  // On polynomials free of `drop` the two orders agree, so this is the
  // reduced basis of the elimination ideal under `rest`.
  out.seed_groebner(std::move(kept));
  return out;
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("saturation by zero");
  Ring big = I.ring();
  Variable v;
  if (!big.has_s) {
    v = Variable::s();
    big.has_s = true;
  } else if (!big.has_aux) {
    v = Variable::aux();
    big.has_aux = true;
  } else {
    throw DomainError("no free variable left for saturation");
  }
  std::vector<Polynomial> g = I.generators();
  g.push_back(Polynomial::variable(v) * f - Polynomial(1));
  Ideal out = eliminate(Ideal(big, std::move(g)), {v});
  if (!(out.ring() == I.ring())) throw DomainError("saturation changed the ring");
  return out;
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  if (I.ring().has_aux) throw DomainError("intersection needs the auxiliary variable free");
  Ring big = I.ring();
  big.has_aux = true;
  Polynomial w = Polynomial::aux();
  Polynomial one_minus_w = Polynomial(1) - w;
  std::vector<Polynomial> g;
  for (const auto& a : I.generators()) g.push_back(w * a);
  for (const auto& b : J.generators()) g.push_back(one_minus_w * b);
  Ideal out = eliminate(Ideal(big, std::move(g)), {Variable::aux()});
  for (const auto& p : out.generators())
    if (p.uses(Variable::aux())) throw std::logic_error("auxiliary variable leaked from intersection");
  return out;
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("quotient by zero");
  Ideal F(I.ring(), {f});
  Ideal cap = ideal_intersection(I, F);
  MonomialOrder ord = I.default_order();
  std::vector<Polynomial> q;
  for (const auto& g : cap.groebner(ord).generators) {
    DivisionResult d = divide(g, {f}, ord);
    if (!d.remainder.is_zero()) throw std::logic_error("inexact division in ideal quotient");
    q.push_back(d.quotients[0]);
  }
  return Ideal(I.ring(), std::move(q));
}

bool ideal_member(const Polynomial& f, const Ideal& I, const MonomialOrder& ord) {
  if (f.is_zero()) return true;
  if (I.is_zero_ideal()) return false;
  return normal_form(f, I.groebner(ord)).is_zero();
}

bool ideal_member(const Polynomial& f, const Ideal& I) { return ideal_member(f, I, I.default_order()); }

bool ideals_equal(const Ideal& I, const Ideal& J, const MonomialOrder& ord) {
  require_same_ring(I, J);
  return I.groebner(ord).generators == J.groebner(ord).generators;
}

bool ideals_equal(const Ideal& I, const Ideal& J) { return ideals_equal(I, J, I.default_order()); }

bool ideal_contains(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  for (const auto& g : J.generators())
    if (!ideal_member(g, I)) return false;
  return true;
}

const char* to_string(RadicalCertificate c) {
  return c == RadicalCertificate::CertifiedRadical ? "certified_radical" : "inconclusive";
}

RadicalCertificate is_radical_via_squarefree_initial(const Ideal& I, const MonomialOrder& ord) {
  for (const auto& m : I.groebner(ord).leading_monomials())
    if (!m.is_squarefree()) return RadicalCertificate::Inconclusive;
  return RadicalCertificate::CertifiedRadical;
}

// ---------------------------------------------------------------- dimension

namespace {

void transversal_search(const std::vector<std::uint64_t>& edges, std::uint64_t chosen, int size, int& best) {
  if (size >= best) return;
  // First edge not yet met, preferring the smallest.
  int pick = -1;
  int pick_size = 65;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k] & chosen) continue;
    int c = std::popcount(edges[k]);
    if (c < pick_size) {
      pick = static_cast<int>(k);
      pick_size = c;
    }
  }
  if (pick < 0) {
    best = size;
    return;
  }
  if (size + 1 >= best) return;
  std::uint64_t e = edges[pick];
  while (e) {
    std::uint64_t bit = e & (~e + 1);
    transversal_search(edges, chosen | bit, size + 1, best);
    e &= e - 1;
  }
}

// Size of the smallest set of variables meeting every support.
int min_transversal(std::vector<std::uint64_t> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::uint64_t> minimal;
  for (auto e : edges) {
    bool dominated = false;
    for (auto f : edges)
      if (f != e && (f & e) == f) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(e);
  }
  int best = 65;
  transversal_search(minimal, 0, 0, best);
  return best;
}

}  // namespace

int krull_dimension(const Ideal& I, const MonomialOrder& ord) {
  const GroebnerBasis& gb = I.groebner(ord);
  if (gb.is_unit()) return -1;
  std::vector<std::uint64_t> edges;
  for (const auto& m : gb.leading_monomials()) edges.push_back(m.support());
  return I.ring().num_variables() - (edges.empty() ? 0 : min_transversal(std::move(edges)));
}

int krull_dimension(const Ideal& I) { return krull_dimension(I, I.default_order()); }

// ---------------------------------------------------------------- multidegree

namespace {

using Exps = XPolynomial::Exps;

Exps column_degree(const Monomial& m) {
  Exps d{};
  for (int i = 1; i <= kMaxMatrixSize; ++i)
    for (int j = 1; j <= kMaxMatrixSize; ++j) {
      int e = m.exponent(Variable::z(i, j));
      if (e) d[j - 1] = static_cast<std::uint8_t>(d[j - 1] + e);
    }
  return d;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

void ie_walk(const std::vector<Monomial>& gens, std::size_t start, const Monomial& lcm, bool odd,
             std::map<Exps, Integer>& acc) {
  for (std::size_t k = start; k < gens.size(); ++k) {
    Monomial l = lcm.lcm(gens[k]);
    bool o = !odd;
    acc[column_degree(l)] += o ? -1 : 1;
    ie_walk(gens, k + 1, l, o, acc);
  }
}

XPolynomial k_inclusion_exclusion(const std::vector<Monomial>& gens) {
  std::map<Exps, Integer> acc;
  acc[Exps{}] += 1;
  ie_walk(gens, 0, Monomial(), false, acc);
  XPolynomial out;
  for (const auto& [e, c] : acc)
    if (c != 0) out += XPolynomial::monomial(e, c);
  return out;
}

XPolynomial k_pivot(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.size() <= 6) return k_inclusion_exclusion(gens);
  // Pivot on the variable occurring most often among non-linear generators.
  std::array<int, kNumSlots> count{};
  bool any = false;
  for (const auto& g : gens) {
    if (g.degree() < 2) continue;
    any = true;
    for (int k = 0; k < kNumSlots; ++k)
      if (g.exponent(k)) ++count[k];
  }
  if (!any) {
    // Generated by distinct variables: a complete intersection.
    XPolynomial out(1);
    for (const auto& g : gens) out = out * (XPolynomial(1) - XPolynomial::monomial(column_degree(g)));
    return out;
  }
  int slot = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial x;
  x.set_exponent(slot, 1);
  std::vector<Monomial> plus{x};
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    if (!g.exponent(slot)) plus.push_back(g);
    colon.push_back(g.exponent(slot) ? g / x : g);
  }
  // 0 -> S/(M:x)(-deg x) -> S/M -> S/(M+x) -> 0
  return k_pivot(std::move(plus)) + XPolynomial::monomial(column_degree(x)) * k_pivot(std::move(colon));
}

}  // namespace

XPolynomial k_polynomial(const std::vector<Monomial>& gens, int n, KPolyMethod method) {
  (void)n;
  std::vector<Monomial> g = minimalize(gens);
  if (method == KPolyMethod::InclusionExclusion ||
      (method == KPolyMethod::Auto && g.size() <= 20))
    return k_inclusion_exclusion(g);
  return k_pivot(std::move(g));
}

XPolynomial multidegree_of_k_polynomial(const XPolynomial& k, int n) {
  // T_j -> 1 - x_j, keeping powers of each factor as they are needed.
  std::vector<std::vector<XPolynomial>> powers(n);
  XPolynomial sub;
  for (const auto& [e, c] : k.terms()) {
    XPolynomial prod(1);
    for (int j = 0; j < kMaxMatrixSize; ++j) {
      if (!e[j]) continue;
      if (j >= n) throw DomainError("K-polynomial uses a column beyond n");
      auto& pw = powers[j];
      if (pw.empty()) {
        pw.push_back(XPolynomial(1));
        pw.push_back(XPolynomial(1) - XPolynomial::x(j + 1));
      }
      while (static_cast<int>(pw.size()) <= e[j]) pw.push_back(pw.back() * pw[1]);
      prod = prod * pw[e[j]];
    }
    sub += prod.scale(c);
  }
  if (sub.is_zero()) return sub;
  return sub.homogeneous_part(sub.min_degree());
}

bool is_column_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  Exps d = column_degree(p.terms()[0].mono);
  for (const auto& t : p.terms())
    if (column_degree(t.mono) != d) return false;
  return true;
}

XPolynomial multidegree(const Ideal& I, const MonomialOrder& ord) {
  const GroebnerBasis& gb = I.groebner(ord);
  for (const auto& g : gb.generators)
    if (!is_column_homogeneous(g))
      throw DomainError("ideal is not homogeneous for the column grading: " + g.to_string());
  return multidegree_of_k_polynomial(k_polynomial(gb.leading_monomials(), I.ring().n), I.ring().n);
}

XPolynomial multidegree(const Ideal& I) { return multidegree(I, I.default_order()); }

// ---------------------------------------------------------------- JSON

nlohmann::json ideal_to_json(const Ideal& I, const MonomialOrder* ord) {
  nlohmann::json j;
  j["ring"] = {{"n", I.ring().n}, {"has_t", I.ring().has_t}};
  if (I.ring().has_s) j["ring"]["has_s"] = true;
  if (I.ring().has_aux) j["ring"]["has_aux"] = true;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : I.generators()) j["generators"].push_back(g.to_string());
  if (ord) {
    const GroebnerBasis& gb = I.groebner(*ord);
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& g : gb.generators) basis.push_back(g.to_string());
    j["groebner"] = {{"order", ord->label()}, {"basis", basis}};
  }
  return j;
}

Ideal ideal_from_json(const nlohmann::json& j) {
  try {
    Ring r;
    r.n = j.at("ring").at("n").get<int>();
    r.has_t = j.at("ring").value("has_t", false);
    r.has_s = j.at("ring").value("has_s", false);
    r.has_aux = j.at("ring").value("has_aux", false);
    std::vector<Polynomial> gens;
    for (const auto& g : j.at("generators")) gens.push_back(Polynomial::parse(g.get<std::string>()));
    return Ideal(r, std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ideal JSON: ") + e.what());
  }
}

}  // namespace hessex
