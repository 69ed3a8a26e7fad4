#pragma once

#include <map>
#include <string>
#include <vector>

#include "zel/multisegment.hpp"
#include "zel/partition.hpp"

namespace zel {

/// Which postconditions were verified while assembling a BranchingResult.
struct BranchCertification {
  bool nonnegative = false;
  bool top_multiplicity_one = false;
  bool support_dominated = false;  // every mu in support satisfies P(a) |> mu
};

struct BranchingResult {
  int n = 0;
  PartitionVector multiplicities{0};
  Partition top;  // P(a), the dominance-maximal constituent label
  BranchCertification cert;
};

/// Decomposition for pairwise-unlinked segment lengths: mu -> K_{mu', lambda'}
/// with lambda = (sorted lengths)'.  Computed both by the Kostka formula and
/// by the Pieri fold; throws std::logic_error if they disagree.
BranchingResult generic_branching(const std::vector<int>& lengths);

/// Coefficients c_b of <a> = sum_{b <= a} c_b pi(b), obtained by exact
/// unitriangular inversion of the m-matrix over the poset of a.  c_a = 1.
std::map<Multisegment, long long> expand_in_standard_basis(const Multisegment& a, int cap = 12);

/// Full branching law: multiplicity of every pi_mu in St(<a>)^{K_+},
/// mult(mu) = sum_b c_b K_{mu', P(b)'}.  Any negative multiplicity throws
/// std::runtime_error("backend inconsistency: decomposition numbers invalid").
BranchingResult branch(const Multisegment& a, int cap = 12);
/// Serial reference for the parallel per-mu kernel in branch().
BranchingResult branch_serial(const Multisegment& a, int cap = 12);

/// JSON report: result, poset, m-matrix, c-coefficients, P(a), P(dual(a))',
/// certification flags, and the backend caveat.
std::string branch_report(const Multisegment& a, int cap = 12);

}  // namespace zel
