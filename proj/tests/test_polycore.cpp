#include <doctest.h>

#include "support.hpp"

using namespace testing_support;

TEST_CASE("leading terms under the elimination order") {
  MonomialOrder ord = MonomialOrder::elimination(4);
  SUBCASE("p_B leads with z[b1,1] z[b2,2] ...") {
    for (int j = 1; j <= 3; ++j)
      for (const auto& B : sheetgen::row_subsets(4, j)) {
        Monomial expected;
        for (int c = 0; c < j; ++c) expected.set_exponent(Variable::z(B[c], c + 1).slot(), 1);
        CHECK(p_minor(4, B).leading_monomial(ord) == expected);
      }
  }
  SUBCASE("t z[1,k] + z[n,k] leads with t z[1,k]") {
    for (int k = 1; k <= 4; ++k)
      CHECK(sheetgen::g(4, k).leading_monomial(ord) == (t() * z(1, k)).head().mono);
  }
  SUBCASE("constants") {
    Polynomial five(5);
    const Term& lt = five.leading_term(ord);
    CHECK(lt.coef == 5);
    CHECK(lt.mono.is_one());
  }
  SUBCASE("zero has no leading term") { CHECK_THROWS_AS(Polynomial().leading_term(ord), DomainError); }
}

TEST_CASE("elimination order ranks s > t > z[1,n] > ... > z[1,1] > z[2,1] > ... > z[n,n]") {
  int n = 4;
  MonomialOrder ord = MonomialOrder::elimination(n);
  std::vector<Variable> chain = {Variable::s(), Variable::t()};
  for (int j = n; j >= 1; --j) chain.push_back(Variable::z(1, j));
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j <= n; ++j) chain.push_back(Variable::z(i, j));
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    CHECK(ord.greater(Monomial::of(chain[k]), Monomial::of(chain[k + 1])));
  CHECK(ord.greater(Monomial::of(Variable::aux()), Monomial::of(Variable::s())));
}

TEST_CASE("monomial lcm") {
  Monomial a = (t() * z(1, 1)).head().mono, b = (t() * z(1, 2)).head().mono;
  CHECK(mono_lcm(a, b) == (t() * z(1, 1) * z(1, 2)).head().mono);
  CHECK(mono_lcm(a, Monomial()) == a);
  CHECK(mono_lcm(a, a) == a);
}

TEST_CASE("polynomial arithmetic examples") {
  Polynomial g = P("t*z[1,1]+z[4,1]");
  Polynomial p = P("z[2,1]*z[3,2]-z[2,2]*z[3,1]");
  CHECK((g * p).size() == 4);
  CHECK(g.substitute(Variable::t(), Polynomial(0)) == z(4, 1));
  CHECK((g + g.scale(-1)).is_zero());
  CHECK((g - g).to_string() == "0");
  CHECK(Polynomial(1).to_string() == "1");
}

TEST_CASE("text grammar round-trips") {
  for (std::string s : {"t*z[1,1]+z[4,1]", "-3/2*s*t^2*z[2,3]+w-7", "z[1,2]^3*z[2,1]", "0", "1", "-1/3"}) {
    Polynomial p = P(s);
    CHECK(P(p.to_string()) == p);
  }
  CHECK(P("t*z[1,1]+z[4,1]").to_string() == "t*z[1,1]+z[4,1]");
  CHECK_THROWS_AS(P("z[1,]"), ParseError);
  CHECK_THROWS_AS(P("q+1"), ParseError);
  CHECK_THROWS_AS(P("z[1,9]"), std::exception);
}

TEST_CASE("order axioms on random triples") {
  auto vars = z_vars(4);
  vars.push_back(Variable::t());
  vars.push_back(Variable::s());
  vars.push_back(Variable::aux());
  for (const auto& ord : all_order_kinds(4)) {
    CAPTURE(ord.label());
    for (int k = 0; k < 1000; ++k) {
      Monomial a = random_monomial(vars, 2), b = random_monomial(vars, 2), c = random_monomial(vars, 2);
      auto ab = ord.compare(a, b);
      // Totality: equal only for identical monomials, antisymmetric otherwise.
      CHECK((ab == 0) == (a == b));
      CHECK(ord.compare(b, a) == (0 <=> ab));
      // Multiplicativity.
      CHECK(ord.compare(a * c, b * c) == ab);
      // 1 is least.
      CHECK(ord.compare(a, Monomial()) >= 0);
      // Transitivity.
      if (ab > 0 && ord.compare(b, c) > 0) CHECK(ord.compare(a, c) > 0);
    }
  }
}

TEST_CASE("leading monomial of a product is the product of leading monomials") {
  auto vars = z_vars(3);
  vars.push_back(Variable::t());
  for (const auto& ord : all_order_kinds(3)) {
    for (int k = 0; k < 200; ++k) {
      Polynomial p = random_poly(vars, 4, 2), q = random_poly(vars, 4, 2);
      if (p.is_zero() || q.is_zero()) continue;
      CHECK((p * q).leading_monomial(ord) == p.leading_monomial(ord) * q.leading_monomial(ord));
    }
  }
}

TEST_CASE("ring laws on random samples") {
  auto vars = z_vars(2);
  vars.push_back(Variable::t());
  for (int k = 0; k < 200; ++k) {
    Polynomial a = random_poly(vars, 4, 2), b = random_poly(vars, 4, 2), c = random_poly(vars, 3, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
  // Exact rationals: no rounding after many operations.
  Polynomial q = P("1/3*z[1,1]");
  Polynomial acc;
  for (int k = 0; k < 300; ++k) acc += q;
  CHECK(acc == z(1, 1).scale(100));
}

TEST_CASE("ring descriptors") {
  CHECK(Ring::z_only(4).num_variables() == 16);
  CHECK(Ring::with_t(4).num_variables() == 17);
  CHECK_THROWS(Ring{0, false, false, false}.validate());
  CHECK_THROWS(Ideal(Ring::z_only(2), {z(3, 1)}));
}
