#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "zel/perm.hpp"
#include "zel/poly.hpp"

namespace zel {

/// Indexed S_n with precomputed lengths, generator products and Bruhat order
/// (rank-matrix criterion).  Shared immutable cache per rank.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n);

  int rank() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const WeylElement& element(int i) const { return elements_[i]; }
  int index(const WeylElement& w) const;
  int length(int i) const { return lengths_[i]; }
  int left_mult(int s, int i) const { return leftMult_[s][i]; }
  int right_mult(int i, int s) const { return rightMult_[s][i]; }
  bool left_descent(int i, int s) const { return lengths_[left_mult(s, i)] < lengths_[i]; }
  bool right_descent(int i, int s) const { return lengths_[right_mult(i, s)] < lengths_[i]; }
  bool leq(int x, int w) const { return leq_[x][w]; }
  int identity() const { return idIndex_; }
  int longest() const { return longestIndex_; }

  static const SymmetricGroup& get(int n);

 private:
  int n_;
  std::vector<WeylElement> elements_;  // ordered by (length, one-line lex)
  std::unordered_map<WeylElement, int, WeylElementHash> index_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> leftMult_, rightMult_;  // [s][i]
  std::vector<std::vector<bool>> leq_;
  int idIndex_ = 0, longestIndex_ = 0;
};

/// Kazhdan-Lusztig polynomials by the classical mu-coefficient recursion,
/// memoized over (x, w) pairs.
class KLTable {
 public:
  explicit KLTable(const SymmetricGroup& g) : g_(g) {}

  const IntPolynomial& polynomial(int x, int w);
  long long mu(int z, int w);

 private:
  const SymmetricGroup& g_;
  std::unordered_map<uint64_t, IntPolynomial> memo_;
  static const IntPolynomial kZero, kOne;
};

/// Independent coding: builds the Kazhdan-Lusztig basis elements C'_w over
/// Z[v, v^-1] (q = v^2) by induction on length and reads the polynomials off
/// the basis coefficients.
class KLBasisTable {
 public:
  explicit KLBasisTable(const SymmetricGroup& g);

  IntPolynomial polynomial(int x, int w);

 private:
  struct Laurent {  // coefficient of v^(off + i) is c[i]
    int off = 0;
    std::vector<long long> c;
  };
  using Element = std::map<int, Laurent>;  // T_x index -> coefficient

  const Element& basis_element(int w);

  const SymmetricGroup& g_;
  std::vector<std::unique_ptr<Element>> cache_;
};

/// Convenience wrapper over a process-wide KLTable for S_n.
IntPolynomial kl_polynomial(const WeylElement& x, const WeylElement& w);

}  // namespace zel
