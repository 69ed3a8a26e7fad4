#include "doctest.h"

#include "zel/kl.hpp"
#include "zel/perm.hpp"

using namespace zel;

TEST_CASE("basic permutation arithmetic") {
  CHECK(length(WeylElement::identity(4)) == 0);
  CHECK(length(WeylElement({2, 1, 0})) == 3);  // longest of S_3
  CHECK(length(WeylElement::parse("2,1,4,3")) == 2);

  const WeylElement w = WeylElement::parse("3,1,4,2");
  CHECK(compose(w, inverse(w)) == WeylElement::identity(4));
  CHECK(compose(inverse(w), w) == WeylElement::identity(4));
  CHECK(WeylElement::parse(w.str()) == w);
  CHECK_THROWS_AS(WeylElement::parse("1,1,2"), std::invalid_argument);
}

TEST_CASE("reduced words") {
  for (const WeylElement& w : all_elements(4)) {
    const std::vector<int> word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == length(w));
    WeylElement prod = WeylElement::identity(4);
    for (int s : word) prod = compose(prod, WeylElement::simple(4, s));
    CHECK(prod == w);
  }
}

TEST_CASE("bruhat order examples") {
  const WeylElement s1 = WeylElement::simple(3, 0), s2 = WeylElement::simple(3, 1);
  CHECK(bruhat_leq(s1, compose(s2, s1)));
  CHECK_FALSE(bruhat_leq(compose(s2, s1), compose(s1, s2)));
  for (const WeylElement& w : all_elements(3)) {
    CHECK(bruhat_leq(WeylElement::identity(3), w));
    CHECK(bruhat_leq(w, w));
  }
}

TEST_CASE("subword criterion agrees with the rank-matrix criterion on S_4") {
  const SymmetricGroup& g = SymmetricGroup::get(4);
  for (int x = 0; x < g.size(); ++x)
    for (int w = 0; w < g.size(); ++w)
      CHECK(bruhat_leq(g.element(x), g.element(w)) == g.leq(x, w));
}

TEST_CASE("cycle types") {
  CHECK(cycle_type(WeylElement::identity(4)) == Partition({1, 1, 1, 1}));
  CHECK(cycle_type(WeylElement::parse("2,1,4,3")) == Partition({2, 2}));
  for (int n = 2; n <= 5; ++n)
    for (const Partition& mu : partitions_of(n)) CHECK(cycle_type(permutation_of_type(mu)) == mu);
}
