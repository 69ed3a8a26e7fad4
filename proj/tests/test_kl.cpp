#include "doctest.h"

#include "zel/kl.hpp"

using namespace zel;

TEST_CASE("normalization and support") {
  const SymmetricGroup& g = SymmetricGroup::get(3);
  KLTable kl(g);
  for (int w = 0; w < g.size(); ++w) {
    CHECK(kl.polynomial(w, w) == IntPolynomial(1));
    for (int x = 0; x < g.size(); ++x)
      if (!g.leq(x, w)) CHECK(kl.polynomial(x, w).is_zero());
  }
}

TEST_CASE("the S_4 value P_{s2, s2 s1 s3 s2} = 1 + q by two codings") {
  const SymmetricGroup& g = SymmetricGroup::get(4);
  const WeylElement s2 = WeylElement::simple(4, 1);
  const WeylElement w = WeylElement::parse("3,4,1,2");  // s2 s1 s3 s2
  {
    WeylElement prod = s2;
    for (int s : {0, 2, 1}) prod = compose(prod, WeylElement::simple(4, s));
    REQUIRE(prod == w);
  }
  const IntPolynomial expected(std::vector<long long>{1, 1});
  KLTable kl(g);
  CHECK(kl.polynomial(g.index(s2), g.index(w)) == expected);
  KLBasisTable basis(g);
  CHECK(basis.polynomial(g.index(s2), g.index(w)) == expected);
  CHECK(kl_polynomial(s2, w) == expected);
}

TEST_CASE("two codings agree on all of S_4, with positivity and degree bound") {
  const SymmetricGroup& g = SymmetricGroup::get(4);
  KLTable kl(g);
  KLBasisTable basis(g);
  for (int w = 0; w < g.size(); ++w)
    for (int x = 0; x < g.size(); ++x) {
      const IntPolynomial& p = kl.polynomial(x, w);
      CHECK(p == basis.polynomial(x, w));
      if (g.leq(x, w) && x != w) {
        CHECK(p.coeff(0) == 1);
        for (int i = 0; i <= p.degree(); ++i) CHECK(p.coeff(i) >= 0);
        CHECK(2 * p.degree() <= g.length(w) - g.length(x) - 1);
      }
    }
}
