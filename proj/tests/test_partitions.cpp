#include "doctest.h"

#include <functional>
#include <vector>

#include "zel/partition.hpp"

using namespace zel;

namespace {

// Independent brute-force oracle: enumerate all fillings of the diagram with
// entries 1..rows(content), keep those with weakly increasing rows, strictly
// increasing columns, and the prescribed content.
long long kostka_bruteforce(const Partition& shape, const Partition& content) {
  const int rows = shape.rows();
  const int letters = content.rows();
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(shape.part(r), 0);
  std::vector<int> used(letters + 1, 0);
  long long count = 0;
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      ++count;
      return;
    }
    if (c == shape.part(r)) {
      rec(r + 1, 0);
      return;
    }
    for (int v = 1; v <= letters; ++v) {
      if (used[v] == content.part(v - 1)) continue;
      if (c > 0 && t[r][c - 1] > v) continue;
      if (r > 0 && c < shape.part(r - 1) && t[r - 1][c] >= v) continue;
      t[r][c] = v;
      ++used[v];
      rec(r, c + 1);
      --used[v];
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST_CASE("conjugate examples and involution") {
  CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
  for (int n = 0; n <= 12; ++n)
    for (const Partition& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("dominance order") {
  CHECK(dominates(Partition({2, 1}), Partition({1, 1, 1})));
  CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
  // incomparable pair
  CHECK_FALSE(dominates(Partition({3, 3}), Partition({4, 1, 1})));
  CHECK_FALSE(dominates(Partition({4, 1, 1}), Partition({3, 3})));
  CHECK_THROWS_WITH_AS(dominates(Partition({2}), Partition({1})), "incomparable sizes",
                       DomainError);

  // partial order axioms, and Lemma 2.5 duality, n <= 8 resp. 9
  for (int n = 1; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps) {
      CHECK(dominates(a, a));
      for (const auto& b : ps) {
        if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
        for (const auto& c : ps)
          if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
      }
    }
  }
  for (int n = 1; n <= 9; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n))
        CHECK(dominates(a, b) == dominates(b.conjugate(), a.conjugate()));
}

TEST_CASE("kostka numbers against brute-force SSYT enumeration") {
  CHECK(kostka_ssyt(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(kostka_ssyt(Partition({1, 1, 1}), Partition({2, 1})) == 0);
  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : partitions_of(n)) {
      CHECK(kostka_ssyt(shape, shape) == 1);
      for (const auto& content : partitions_of(n))
        CHECK(kostka_ssyt(shape, content) == kostka_bruteforce(shape, content));
    }
}

TEST_CASE("kostka positivity matches dominance") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& shape : partitions_of(n))
      for (const auto& content : partitions_of(n))
        CHECK((kostka_ssyt(shape, content) > 0) == dominates(shape, content));
}

TEST_CASE("pieri step examples") {
  PartitionVector acc(2);
  acc.add(Partition({1, 1}), 1);
  PartitionVector out = pieri_sign_step(acc, 1);
  CHECK(out.coeff(Partition({2, 1})) == 1);
  CHECK(out.coeff(Partition({1, 1, 1})) == 1);
  CHECK(out.entries().size() == 2);

  PartitionVector empty(0);
  empty.add(Partition(), 1);
  PartitionVector col = pieri_sign_step(empty, 4);
  CHECK(col.coeff(Partition({1, 1, 1, 1})) == 1);
  CHECK(col.entries().size() == 1);

  PartitionVector scaled(1);
  scaled.add(Partition({1}), 2);
  PartitionVector lin = pieri_sign_step(scaled, 1);
  CHECK(lin.coeff(Partition({2})) == 2);
  CHECK(lin.coeff(Partition({1, 1})) == 2);
}

TEST_CASE("sign induction multiplicities") {
  PartitionVector r = sign_induction_multiplicities({2, 1});
  CHECK(r.coeff(Partition({2, 1})) == 1);
  CHECK(r.coeff(Partition({1, 1, 1})) == 1);
  CHECK(r.entries().size() == 2);

  PartitionVector single = sign_induction_multiplicities({5});
  CHECK(single.coeff(Partition({1, 1, 1, 1, 1})) == 1);
  CHECK(single.entries().size() == 1);
}

TEST_CASE("text and json forms") {
  CHECK(Partition({3, 2, 1}).str() == "3,2,1");
  CHECK(Partition().str() == "-");
  CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
  CHECK(Partition::parse("-") == Partition());
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("x"), std::invalid_argument);

  PartitionVector pv(3);
  pv.add(Partition({2, 1}), 1);
  pv.add(Partition({3}), 2);
  CHECK(pv.json() ==
        R"({"n":3,"entries":[{"partition":[3],"coeff":2},{"partition":[2,1],"coeff":1}]})");
}
