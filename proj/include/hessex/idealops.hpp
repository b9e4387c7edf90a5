#pragma once

// Ideals with cached Groebner bases, and the ideal-level calculus on top.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "hessex/groebner.hpp"
#include "hessex/polycore.hpp"
#include "hessex/xpoly.hpp"

namespace hessex {

/// Engine options used by every Ideal::groebner call that does not pass its own.
void set_engine_options(const BuchbergerOptions& opts);
BuchbergerOptions engine_options();

/// Caps the S-pair budget for Groebner computations started on this thread
/// while in scope; never raises the global budget.
class ScopedPairBudget {
 public:
  explicit ScopedPairBudget(std::uint64_t budget);
  ~ScopedPairBudget();
  ScopedPairBudget(const ScopedPairBudget&) = delete;
  ScopedPairBudget& operator=(const ScopedPairBudget&) = delete;

 private:
  std::uint64_t saved_;
};

class Ideal {
 public:
  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial> gens);
  static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
  static Ideal unit(const Ring& ring) { return Ideal(ring, {Polynomial(1)}); }

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  /// Elimination lex order for this ring's matrix size.
  MonomialOrder default_order() const { return MonomialOrder::elimination(ring_.n); }

  /// Reduced basis under `ord`, computed once per order and shared by copies.
  const GroebnerBasis& groebner(const MonomialOrder& ord) const;
  const GroebnerBasis& groebner() const { return groebner(default_order()); }
  /// Records a basis known to be the reduced basis under its order.
  void seed_groebner(GroebnerBasis gb) const;

  bool is_zero_ideal() const;
  bool is_unit_ideal() const;
  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::unique_ptr<GroebnerBasis>> bases;
  };
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// Elimination ideal I ∩ k[remaining variables]; `drop` may contain t, s, w.
Ideal eliminate(const Ideal& I, const std::vector<Variable>& drop);
/// (I : f^∞) via a fresh variable v and the generator v*f - 1.
Ideal saturate(const Ideal& I, const Polynomial& f);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
/// (I : f) = (I ∩ ⟨f⟩) / f.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);

bool ideal_member(const Polynomial& f, const Ideal& I, const MonomialOrder& ord);
bool ideal_member(const Polynomial& f, const Ideal& I);
bool ideals_equal(const Ideal& I, const Ideal& J);
bool ideals_equal(const Ideal& I, const Ideal& J, const MonomialOrder& ord);
/// J ⊆ I.
bool ideal_contains(const Ideal& I, const Ideal& J);

enum class RadicalCertificate { CertifiedRadical, Inconclusive };
const char* to_string(RadicalCertificate c);
RadicalCertificate is_radical_via_squarefree_initial(const Ideal& I, const MonomialOrder& ord);

/// Krull dimension of the quotient ring; -1 for the unit ideal.
int krull_dimension(const Ideal& I, const MonomialOrder& ord);
int krull_dimension(const Ideal& I);

enum class KPolyMethod { Auto, InclusionExclusion, Pivot };
/// Numerator of the column-graded Hilbert series of S/M for a monomial
/// ideal M, in T_1..T_n (returned in the x variables of XPolynomial).
/// z[i,j] has degree e_j; t, s and w have degree 0.
XPolynomial k_polynomial(const std::vector<Monomial>& gens, int n, KPolyMethod method = KPolyMethod::Auto);
/// Lowest-degree part of K(1 - x_1, ..., 1 - x_n).
XPolynomial multidegree_of_k_polynomial(const XPolynomial& k, int n);
/// Multidegree under the column grading; throws DomainError if the reduced
/// basis is not homogeneous.
XPolynomial multidegree(const Ideal& I, const MonomialOrder& ord);
XPolynomial multidegree(const Ideal& I);
bool is_column_homogeneous(const Polynomial& p);

nlohmann::json ideal_to_json(const Ideal& I, const MonomialOrder* ord = nullptr);
Ideal ideal_from_json(const nlohmann::json& j);

}  // namespace hessex
