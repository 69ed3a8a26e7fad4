// Acceptance gate: one pass/fail line per criterion.  Usage:
//   acceptance <path-to-stbranch-cli>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "zel/branching.hpp"
#include "zel/hecke.hpp"
#include "zel/kl.hpp"
#include "zel/multisegment.hpp"
#include "zel/partition.hpp"
#include "zel/symgroup.hpp"

using namespace zel;
using zel::testing::all_multisegments;
using zel::testing::pairwise_unlinked;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& title, const std::function<void()>& body) {
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  } catch (...) {
    error = "unknown exception";
  }
  if (error.empty()) {
    std::cout << "PASS  criterion " << number << ": " << title << "\n";
  } else {
    ++failures;
    std::cout << "FAIL  criterion " << number << ": " << title << " — " << error << "\n";
  }
  std::cout.flush();
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

// ---- criterion bodies ------------------------------------------------------

void kostka_pieri_equivalence() {  // 1
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lengths : partitions_of(n)) {
      // sign_induction_multiplicities itself cross-checks Pieri vs Kostka
      const PartitionVector viaPieri = sign_induction_multiplicities(lengths.parts());
      const PartitionVector viaChars = decompose(induce_from_young(
          lengths.parts(), std::vector<YoungFactor>(lengths.rows(), YoungFactor::Sign)));
      require(viaPieri == viaChars,
              "character decomposition disagrees for lengths " + lengths.str());
    }
}

void support_law() {  // 2
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lam : partitions_of(n)) {
      const Partition lamc = lam.conjugate();
      for (const Partition& tau : partitions_of(n)) {
        const long long c = kostka_ssyt(tau.conjugate(), lamc);
        require((c != 0) == dominates(lam, tau),
                "support law fails at tau=" + tau.str() + " lambda=" + lam.str());
        if (tau == lam) require(c == 1, "c_lambda != 1 at lambda=" + lam.str());
      }
    }
}

void hecke_relations_and_deodhar() {  // 3
  for (int n = 2; n <= 4; ++n)
    require(verify_hecke_relations(n), "relation suite failed for n=" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) {
    const int gens = n - 1;
    for (int mask = 0; mask < (1 << gens); ++mask) {
      std::vector<int> J;
      for (int s = 0; s < gens; ++s)
        if (mask & (1 << s)) J.push_back(s);
      for (const WeylElement& x : distinguished_reps(n, J))
        for (int s = 0; s < gens; ++s) {
          const WeylElement sx = compose(WeylElement::simple(n, s), x);
          const bool inY = in_distinguished_reps(sx, J);
          bool isFold = false;
          for (int j : J)
            if (sx == compose(x, WeylElement::simple(n, j))) isFold = true;
          require(inY != isFold, "trichotomy not exclusive");
          const DeodharCase c = deodhar_case(x, s, J);
          if (inY) {
            require((c.kind == DeodharCase::Up) == (length(sx) == length(x) + 1) &&
                        (c.kind == DeodharCase::Down) == (length(sx) == length(x) - 1),
                    "up/down misclassified");
          } else {
            require(c.kind == DeodharCase::Fold && sx == compose(x, WeylElement::simple(n, c.fold_u)),
                    "fold misclassified");
          }
        }
    }
  }
}

void theorem_2_14() {  // 4
  for (int n = 1; n <= 6; ++n)
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::vector<int> lengths;  // composition of n from the cut mask
      int prev = 0;
      for (int i = 1; i <= n; ++i)
        if (i == n || (mask & (1 << (i - 1)))) {
          lengths.push_back(i - prev);
          prev = i;
        }
      require(specialize_q1_decompose(all_sign_module(lengths)) ==
                  sign_induction_multiplicities(lengths),
              "q=1 decomposition mismatch for a composition of " + std::to_string(n));
    }
}

void kl_sanity() {  // 5
  // the pinned S_4 value, by two independent codings
  {
    const SymmetricGroup& g = SymmetricGroup::get(4);
    const int x = g.index(WeylElement::simple(4, 1));
    const int w = g.index(WeylElement::parse("3,4,1,2"));  // s2 s1 s3 s2
    const IntPolynomial expected(std::vector<long long>{1, 1});
    KLTable classical(g);
    KLBasisTable basis(g);
    require(classical.polynomial(x, w) == expected, "classical coding misses 1+q");
    require(basis.polynomial(x, w) == expected, "basis coding misses 1+q");
    for (int ww = 0; ww < g.size(); ++ww)
      for (int xx = 0; xx < g.size(); ++xx)
        require(classical.polynomial(xx, ww) == basis.polynomial(xx, ww),
                "codings disagree on S_4");
  }
  for (int n : {4, 5}) {
    const SymmetricGroup& g = SymmetricGroup::get(n);
    KLTable kl(g);
    for (int w = 0; w < g.size(); ++w) {
      require(kl.polynomial(w, w) == IntPolynomial(1), "P_{w,w} != 1");
      for (int x = 0; x < g.size(); ++x) {
        const IntPolynomial& p = kl.polynomial(x, w);
        if (!g.leq(x, w)) {
          require(p.is_zero(), "nonzero off Bruhat order");
          continue;
        }
        for (int i = 0; i <= p.degree(); ++i)
          require(p.coeff(i) >= 0, "negative KL coefficient");
        if (x != w)
          require(2 * p.degree() <= g.length(w) - g.length(x) - 1, "degree bound violated");
      }
    }
  }
}

void theorem_3_3() {  // 6
  for (int n = 1; n <= 5; ++n)
    for (const auto& sup : zel::testing::all_supports(n)) {
      const auto all = zel::testing::multisegments_with_support(sup);
      for (const Multisegment& a : all) {
        const MultisegmentPoset poset = build_poset(a);
        for (const Multisegment& b : all)
          require((decomposition_number(b, a) != 0) == (poset.index.count(b) > 0),
                  "m(b;a) support mismatch at a=" + a.str() + " b=" + b.str());
        require(decomposition_number(a, a) == 1, "m(a;a) != 1 at " + a.str());
        const auto m = m_matrix(poset);
        const int k = static_cast<int>(poset.nodes.size());
        // node order is a linear extension with the maximum first, so the
        // matrix must be lower triangular with unit diagonal
        for (int i = 0; i < k; ++i) {
          require(m[i][i] == 1, "non-unit diagonal");
          for (int j = i + 1; j < k; ++j)
            require(m[i][j] == 0, "m-matrix not triangular over the linear extension");
        }
      }
    }
}

void theorem_5_2() {  // 7
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lengths : partitions_of(n)) {
      const BranchingResult r = generic_branching(lengths.parts());
      const Partition lam = lengths.conjugate();
      require(r.top == lam, "generic top is not lengths'");
      const Partition lamc = lam.conjugate();
      for (const Partition& mu : partitions_of(n))
        require(r.multiplicities.coeff(mu) == kostka_ssyt(mu.conjugate(), lamc),
                "generic multiplicity is not the Kostka number");
      const PartitionVector viaChars = decompose(induce_from_young(
          lengths.parts(), std::vector<YoungFactor>(lengths.rows(), YoungFactor::Sign)));
      require(r.multiplicities == viaChars, "generic law disagrees with the character oracle");
    }
  for (int n = 1; n <= 6; ++n)
    for (const Multisegment& a : all_multisegments(n)) {
      if (!pairwise_unlinked(a)) continue;
      require(branch(a).multiplicities == generic_branching(a.lengths()).multiplicities,
              "branch != generic on unlinked a=" + a.str());
    }
}

void theorem_6_2() {  // 8
  for (int n = 1; n <= 6; ++n)
    for (const Multisegment& a : all_multisegments(n)) {
      const BranchingResult r = branch(a);  // throws on negativity / bad top
      for (const auto& [mu, c] : r.multiplicities.entries()) {
        require(c >= 0, "negative multiplicity at " + a.str());
        require(dominates(r.top, mu), "support outside the dominance cone at " + a.str());
      }
      require(r.multiplicities.coeff(partition_P(a)) == 1, "top multiplicity != 1 at " + a.str());
    }
  // hand-derivable instances
  for (int n = 1; n <= 6; ++n) {
    const BranchingResult st = branch(Multisegment({Segment(0, n - 1)}));
    require(st.multiplicities.coeff(Partition(std::vector<int>(n, 1))) == 1 &&
                st.multiplicities.entries().size() == 1,
            "single segment is not the Steinberg constituent");
  }
  const BranchingResult pair = branch(Multisegment::parse("[0]+[1]"));
  require(pair.multiplicities.coeff(Partition({2})) == 1 &&
              pair.multiplicities.entries().size() == 1,
          "{[0],[1]} does not branch to {(2):1}");
}

void duality_remark() {  // 9
  for (int n = 1; n <= 5; ++n)
    for (const Multisegment& a : all_multisegments(n)) {
      const Multisegment d = zelevinsky_dual(a);
      require(d.support() == a.support(), "dual changes the support at " + a.str());
      require(zelevinsky_dual(d) == a, "dual is not an involution at " + a.str());
      const long long mult = branch(a).multiplicities.coeff(partition_P(d).conjugate());
      require(mult > 0, "P(dual(a))' not in the branch support at " + a.str());
    }
  for (int n = 1; n <= 6; ++n) {
    std::vector<Segment> split;
    for (int i = 0; i < n; ++i) split.emplace_back(i, i);
    require(zelevinsky_dual(Multisegment({Segment(0, n - 1)})) == Multisegment(split),
            "single-segment dual is not the fully split multisegment");
  }
}

std::string run_cli(const std::string& cli, const std::string& args, int expectStatus) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "cannot run CLI");
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  require(WIFEXITED(status) && WEXITSTATUS(status) == expectStatus,
          "CLI exit status mismatch for: " + args);
  return out;
}

void cli_golden(const std::string& cli) {  // 10
  require(!cli.empty(), "CLI path not provided");
  for (int round = 0; round < 2; ++round) {  // byte stability across runs
    require(run_cli(cli, "branch \"[0,2]\"", 0) == "1,1,1 : 1\n", "branch golden mismatch");
    require(run_cli(cli, "generic 2,1", 0) == "2,1 : 1\n1,1,1 : 1\n", "generic golden mismatch");
    require(run_cli(cli, "m \"[0,1]\" \"[0,0]+[1,1]\"", 0) == "1\n", "m golden mismatch");
  }
  // printed literals re-parse
  std::istringstream rows(run_cli(cli, "generic 2,1", 0));
  std::string line;
  while (std::getline(rows, line)) {
    const size_t sep = line.find(" : ");
    require(sep != std::string::npos, "bad table row");
    (void)Partition::parse(line.substr(0, sep));
    (void)std::stoll(line.substr(sep + 3));
  }
  std::string dual = run_cli(cli, "mseg dual \"[0,2]\"", 0);
  require(!dual.empty() && dual.back() == '\n', "missing newline");
  dual.pop_back();
  require(Multisegment::parse(dual) == zelevinsky_dual(Multisegment::parse("[0,2]")),
          "dual output does not re-parse");
  // exit-code taxonomy
  (void)run_cli(cli, "m \"[0]\" \"[1]\"", 1);    // domain error
  (void)run_cli(cli, "branch \"oops\"", 2);      // usage error
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  run_criterion(1, "Kostka/Pieri/character equivalence, n <= 8", kostka_pieri_equivalence);
  run_criterion(2, "support law c_tau != 0 iff tau dominated, c_lambda = 1, n <= 8", support_law);
  run_criterion(3, "Hecke relations (n <= 4) and Deodhar trichotomy (n <= 5)",
                hecke_relations_and_deodhar);
  run_criterion(4, "q=1 induced decomposition matches S_n induction, n <= 6", theorem_2_14);
  run_criterion(5, "KL sanity on S_4/S_5, pinned value 1+q by two codings", kl_sanity);
  run_criterion(6, "decomposition numbers supported exactly on the poset, unitriangular, n <= 5",
                theorem_3_3);
  run_criterion(7, "generic branching law vs oracle (n <= 8) and unlinked branch (n <= 6)",
                theorem_5_2);
  run_criterion(8, "end-to-end branching: nonnegative, top 1, dominance cone, n <= 6",
                theorem_6_2);
  run_criterion(9, "duality: involution and P(dual(a))' in the branch support, n <= 5",
                duality_remark);
  run_criterion(10, "CLI golden files byte-stable and re-parseable",
                [&] { cli_golden(cli); });
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 10 criteria passed\n";
  return 0;
}
