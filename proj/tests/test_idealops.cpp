#include <doctest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

const Ring R4t = Ring::with_t(4);
const Ring R4 = Ring::z_only(4);

Polynomial w21() { return P("z[2,1]*z[1,2]-z[2,2]*z[1,1]"); }

std::vector<Ideal> golden_ideals() {
  return {K(R4t, 2),
          J_t(4, 2),
          ideal_sum(J_t(4, 2), K(R4t, 2)),
          minimal_sheet_closed_form(HessenbergFunction::parse("2,4,4,4")),
          hessenberg_ideal(minimal_nilpotent_matrix(4), HessenbergFunction::identity(4)),
          hessenberg_ideal(minimal_nilpotent_matrix(4), HessenbergFunction::parse("2,2,4,4")),
          schubert_determinantal_ideal(Permutation::parse("3142"))};
}

}  // namespace

TEST_CASE("sum and product") {
  Ideal prod = ideal_product(J_t(4, 1), K(R4t, 2));
  CHECK(prod.generators().size() == 3);
  for (const auto& g : prod.generators()) CHECK(ideal_member(g, minimal_sheet_closed_form(HessenbergFunction::parse("2,4,4,4"))));
  Ideal I = K(R4t, 2);
  CHECK(ideals_equal(ideal_sum(I, Ideal::zero(R4t)), I));
  CHECK(K(R4t, 0).is_unit_ideal());
  CHECK(ideals_equal(ideal_product(I, K(R4t, 0)), I));
  CHECK(K(R4t, 4).is_zero_ideal());
  CHECK_THROWS_AS(ideal_sum(K(R4, 2), K(R4t, 2)), DomainError);
}

TEST_CASE("elimination") {
  Ring Rs{4, true, true, false};
  auto lift = [&](const Ideal& I) {
    auto g = I.generators();
    g.push_back(sheetgen::st_minus_one());
    return Ideal(Rs, g);
  };
  Ideal E = eliminate(lift(J_t(4, 2)), {Variable::s()});
  CHECK(E.ring() == R4t);
  CHECK(ideals_equal(E, J_t(4, 2)));

  Ideal S = ideal_sum(J_t(4, 2), K(R4t, 2));
  Ideal E2 = eliminate(lift(S), {Variable::s()});
  CHECK(ideal_contains(E2, S));
  CHECK_FALSE(ideals_equal(E2, S));
  CHECK(ideal_member(w21(), E2));

  Ideal just_s(Rs, {Polynomial::s()});
  CHECK(eliminate(just_s, {Variable::s()}).groebner().generators.empty());
}

TEST_CASE("saturation") {
  Ideal I(R4t, {t() * z(1, 1)});
  CHECK(ideals_equal(saturate(I, t()), Ideal(R4t, {z(1, 1)})));
  for (int i = 0; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      Ideal S = ideal_sum(J_t(4, i), K(R4t, j));
      CHECK(ideals_equal(saturate(S, t()), S));
    }
  Ideal F = hessenberg_ideal(minimal_sheet_matrix(4), HessenbergFunction::parse("2,4,4,4"));
  CHECK(ideals_equal(saturate(F, generic_determinant(4)), F));
  CHECK_THROWS_AS(saturate(F, Polynomial()), DomainError);
}

TEST_CASE("intersection") {
  Ideal gK = Ideal(R4t, {sheetgen::g(4, 1)});
  Ideal cap = ideal_intersection(K(R4t, 2), gK);
  CHECK(ideals_equal(cap, ideal_product(gK, K(R4t, 2))));
  for (const auto& g : cap.groebner().generators) CHECK_FALSE(g.uses(Variable::aux()));
  CHECK(ideals_equal(ideal_intersection(cap, Ideal::unit(R4t)), cap));
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      Ideal P = ideal_product(J_t(4, i), K(R4t, j));
      CHECK(ideals_equal(ideal_intersection(J_t(4, i), K(R4t, j)), P));
    }
}

TEST_CASE("quotient") {
  Ideal F = hessenberg_ideal(minimal_sheet_matrix(4), HessenbergFunction::parse("2,4,4,4"));
  CHECK(ideals_equal(ideal_quotient(F, t() - Polynomial(1)), F));
  CHECK(ideals_equal(ideal_quotient(Ideal(R4t, {t() * z(1, 1)}), t()), Ideal(R4t, {z(1, 1)})));
  Ideal S = ideal_sum(J_t(4, 2), K(R4t, 2));
  Ideal Q = ideal_quotient(S, t());
  CHECK(ideal_contains(Q, S));
  CHECK_FALSE(ideal_contains(S, Q));
  CHECK(ideal_member(w21(), Q));
}

TEST_CASE("containment lattice of J_i + K_j") {
  for (int i = 0; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k)
        for (int l = k + 1; l <= 4; ++l) {
          Ideal A = ideal_sum(J_t(4, i), K(R4t, j));
          Ideal B = ideal_sum(J_t(4, k), K(R4t, l));
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(k);
          CAPTURE(l);
          CHECK(ideal_contains(B, A) == (i <= k && j >= l));
        }
}

TEST_CASE("primes of h = (2,4,4,4) are pairwise incomparable") {
  auto h = HessenbergFunction::parse("2,4,4,4");
  Ideal P1 = P_t(h, 1), P2 = P_t(h, 2);
  CHECK_FALSE(ideal_contains(P1, P2));
  CHECK_FALSE(ideal_contains(P2, P1));
  CHECK(ideals_equal(P1, P1));
}

TEST_CASE("square-free initial certificate") {
  MonomialOrder elim = MonomialOrder::elimination(4);
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      CHECK(is_radical_via_squarefree_initial(ideal_product(J_t(4, i), K(R4t, j)), elim) ==
            RadicalCertificate::CertifiedRadical);
  CHECK(is_radical_via_squarefree_initial(Ideal(R4, {z(1, 1) * z(1, 1)}), elim) ==
        RadicalCertificate::Inconclusive);
  MonomialOrder diag = MonomialOrder::diagonal_twist(4, {1, 2, 3, 4});
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 4; ++j)
      CHECK(is_radical_via_squarefree_initial(ideal_product(J_0(4, i), K(R4, j)), diag) ==
            RadicalCertificate::CertifiedRadical);
  CHECK(std::string(to_string(RadicalCertificate::CertifiedRadical)) == "certified_radical");
}

TEST_CASE("Krull dimension") {
  CHECK(krull_dimension(K(R4t, 2)) == 15);
  CHECK(krull_dimension(Ideal::zero(R4)) == 16);
  CHECK(krull_dimension(Ideal::unit(R4)) == -1);
  CHECK(krull_dimension(K(R4, 2)) == 14);
  CHECK(krull_dimension(J_0(4, 1)) == 15);
  Ideal X4132 = w0_act(schubert_determinantal_ideal(Permutation::longest(4) * Permutation::parse("4132")));
  Ideal X3421 = w0_act(schubert_determinantal_ideal(Permutation::longest(4) * Permutation::parse("3421")));
  CHECK(krull_dimension(X4132) == 14);
  CHECK(krull_dimension(X3421) == 15);
  for (const auto& I : golden_ideals()) {
    int ref = krull_dimension(I, MonomialOrder::elimination(4));
    CHECK(krull_dimension(I, MonomialOrder::lex_default()) == ref);
  }
}

TEST_CASE("K-polynomial algorithms agree") {
  for (const auto& I : golden_ideals()) {
    auto lms = I.groebner().leading_monomials();
    if (lms.size() > 20) continue;
    CHECK(k_polynomial(lms, 4, KPolyMethod::InclusionExclusion) == k_polynomial(lms, 4, KPolyMethod::Pivot));
  }
  // Randomized monomial ideals in a 3x3 matrix.
  auto vars = z_vars(3);
  for (int k = 0; k < 50; ++k) {
    std::vector<Monomial> gens;
    int m = uniform(1, 6);
    for (int a = 0; a < m; ++a) {
      Monomial g = random_monomial(vars, 1);
      if (!g.is_one()) gens.push_back(g);
    }
    CHECK(k_polynomial(gens, 3, KPolyMethod::InclusionExclusion) == k_polynomial(gens, 3, KPolyMethod::Pivot));
  }
}

TEST_CASE("multidegree") {
  CHECK(multidegree(Ideal::zero(R4)) == XPolynomial(1));
  CHECK(multidegree(K(R4, 2)) == schubert_polynomial(v_of(4, 2)));
  CHECK(multidegree(K(R4t, 2)) == schubert_polynomial(v_of(4, 2)));
  CHECK(multidegree(J_0(4, 2)) == XPolynomial::parse("x1*x2"));
  // Nilpotent fiber of h = (1,2,3,4): degree equals the codimension.
  Ideal I = hessenberg_ideal(minimal_nilpotent_matrix(4), HessenbergFunction::identity(4));
  XPolynomial m = multidegree(I);
  CHECK(m.is_homogeneous());
  CHECK(m.degree() == 16 - krull_dimension(I));
  CHECK(m == XPolynomial::parse("2*x1^3+2*x1^2*x2+2*x1*x2^2+2*x1*x2*x3"));
  CHECK_THROWS_AS(multidegree(Ideal(R4, {z(1, 1) + z(1, 2)})), DomainError);
}

TEST_CASE("family multidegree equals fiber multidegrees") {
  for (const auto& h : HessenbergFunction::all(4)) {
    CAPTURE(h.to_string());
    Ideal F = hessenberg_ideal(minimal_sheet_matrix(4), h);
    XPolynomial m = multidegree(F);
    CHECK(multidegree(ev(0, F)) == m);
    CHECK(multidegree(ev(1, F)) == m);
  }
}

TEST_CASE("saturation laws") {
  for (const auto& I : golden_ideals()) {
    Polynomial f = I.ring().has_t ? t() : z(1, 1);
    Ideal S = saturate(I, f);
    CHECK(ideal_contains(S, I));
    CHECK(ideals_equal(saturate(S, f), S));
  }
}

TEST_CASE("intersection membership oracle") {
  // Random ideals in z[1,1], z[1,2], z[2,1], z[2,2].
  Ring R = Ring::z_only(2);
  auto vars = z_vars(2);
  for (int round = 0; round < 6; ++round) {
    auto gens = [&] {
      std::vector<Polynomial> g;
      int m = uniform(1, 3);
      for (int k = 0; k < m; ++k) {
        Polynomial p = random_poly(vars, uniform(1, 3), 1);
        // Keep total degree at most 2.
        std::vector<Term> ts;
        for (const auto& term : p.terms())
          if (term.mono.degree() <= 2) ts.push_back(term);
        p = Polynomial::from_terms(ts);
        if (!p.is_zero()) g.push_back(p);
      }
      return g;
    };
    Ideal I(R, gens()), J(R, gens());
    Ideal cap = ideal_intersection(I, J);
    for (int k = 0; k < 200; ++k) {
      Polynomial f;
      if (k % 2 == 0 && !I.generators().empty() && !J.generators().empty()) {
        // Products land in both ideals; perturb some of them.
        f = I.generators()[uniform(0, (int)I.generators().size() - 1)] *
            J.generators()[uniform(0, (int)J.generators().size() - 1)] * random_poly(vars, 2, 1);
        if (k % 4 == 0) f += random_poly(vars, 1, 1);
      } else {
        f = random_poly(vars, 3, 2);
      }
      CHECK(ideal_member(f, cap) == (ideal_member(f, I) && ideal_member(f, J)));
    }
    CHECK(ideal_contains(cap, ideal_product(I, J)));
  }
}

TEST_CASE("product is contained in intersection") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 4; ++j) {
      Ideal A = J_0(4, i), B = K(R4, j);
      CHECK(ideal_contains(ideal_intersection(A, B), ideal_product(A, B)));
    }
}

TEST_CASE("JSON round trip") {
  Ideal I = minimal_sheet_closed_form(HessenbergFunction::parse("2,4,4,4"));
  MonomialOrder ord = MonomialOrder::elimination(4);
  auto j = ideal_to_json(I, &ord);
  CHECK(j["ring"]["n"] == 4);
  CHECK(j["ring"]["has_t"] == true);
  CHECK(j["groebner"]["order"] == "elimination");
  Ideal back = ideal_from_json(j);
  CHECK(ideals_equal(back, I));
  CHECK_THROWS(ideal_from_json(nlohmann::json::parse(R"({"ring":{"n":4},"generators":["t*z[1,1]"]})")));
  CHECK_THROWS(ideal_from_json(nlohmann::json::parse(R"({"ring":{"n":4,"has_t":false},"generators":["z[1,"]})")));
}
