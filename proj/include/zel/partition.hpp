#pragma once

#include <map>
#include <string>
#include <vector>

#include "zel/errors.hpp"

namespace zel {

/// Partition of n: weakly decreasing sequence of positive integers.
/// Trailing zeros are never stored; the empty sequence is the unique
/// partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws if not weakly decreasing positive

  /// Builds a partition from an arbitrary list of nonnegative integers
  /// (sorts descending, drops zeros).
  static Partition from_unsorted(std::vector<int> parts);

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  /// Part at 0-based row index, 0 beyond the last row.
  int part(int i) const {
    return (i >= 0 && i < rows()) ? parts_[i] : 0;
  }

  Partition conjugate() const;

  /// Text form "3,2,1"; the empty partition is "-".
  std::string str() const;
  static Partition parse(const std::string& text);  // throws std::invalid_argument

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Dominance: every prefix sum of lam is >= the matching prefix sum of mu.
/// Throws DomainError("incomparable sizes") unless |lam| == |mu|.
bool dominates(const Partition& lam, const Partition& mu);

/// All partitions of n in descending lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

/// Number of semistandard Young tableaux of the given shape whose entry
/// multiplicities are the content (counted via horizontal-strip chains).
/// Throws DomainError unless |shape| == |content|.
long long kostka_ssyt(const Partition& shape, const Partition& content);

/// Descending lexicographic order on partitions; a linear extension of the
/// dominance order, used as the canonical serialization order.
struct DescLex {
  bool operator()(const Partition& a, const Partition& b) const {
    return b.parts() < a.parts();
  }
};

/// Finitely supported integer-valued map on partitions of a fixed n.
class PartitionVector {
 public:
  explicit PartitionVector(int n) : n_(n) {
    if (n < 0) throw DomainError("PartitionVector: negative size");
  }

  int n() const { return n_; }
  void add(const Partition& p, long long coeff);  // accumulates, drops zeros
  long long coeff(const Partition& p) const;
  const std::map<Partition, long long, DescLex>& entries() const { return entries_; }
  bool operator==(const PartitionVector& o) const = default;

  std::string json() const;

 private:
  int n_;
  std::map<Partition, long long, DescLex> entries_;
};

/// One Pieri step for sign inductions: every partition in acc receives a
/// vertical strip of l boxes (no two in the same row) in all possible ways.
PartitionVector pieri_sign_step(const PartitionVector& acc, int l);

/// Folds pieri_sign_step over the lengths starting from {(): 1}, and checks
/// the result against the Kostka numbers K_{tau', lambda'} with
/// lambda = (sorted lengths)'.  Throws std::logic_error if the two routes
/// disagree.
PartitionVector sign_induction_multiplicities(const std::vector<int>& lengths);

}  // namespace zel
