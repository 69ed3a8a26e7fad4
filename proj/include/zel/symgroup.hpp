#pragma once

#include <map>
#include <vector>

#include "zel/partition.hpp"

namespace zel {

/// Integer-valued class function on S_n, stored by cycle type.
struct ClassFunction {
  int n = 0;
  std::map<Partition, long long> values;  // keyed by cycle type, all partitions of n

  long long at(const Partition& cycleType) const;
  ClassFunction& operator+=(const ClassFunction& o);
  bool operator==(const ClassFunction& o) const = default;
};

/// |centralizer| of a permutation of the given cycle type: prod k^{m_k} m_k!.
long long centralizer_order(const Partition& cycleType);

long long factorial(int n);

/// Number of standard Young tableaux of shape lam (hook length formula);
/// equals dim rho_lam.
long long standard_tableau_count(const Partition& lam);

/// Character of the irreducible rho_lam, evaluated by the
/// Murnaghan-Nakayama rule.
ClassFunction irreducible_character(const Partition& lam);

/// Full character table of S_n, cached per n.  Rows are irreducibles indexed
/// by partitions_of(n), columns are cycle types in the same order.
class CharacterTable {
 public:
  explicit CharacterTable(int n);
  int n() const { return n_; }
  const std::vector<Partition>& labels() const { return labels_; }
  long long value(int irrep, int cls) const { return table_[irrep][cls]; }
  const ClassFunction& character(int irrep) const { return chars_[irrep]; }

  static const CharacterTable& get(int n);

 private:
  int n_;
  std::vector<Partition> labels_;
  std::vector<std::vector<long long>> table_;
  std::vector<ClassFunction> chars_;
};

enum class YoungFactor { Trivial, Sign };

/// Character of Ind_{S_{n1} x ... x S_{nr}}^{S_n} of a tensor product of
/// trivial/sign characters, computed by the induced-character formula over
/// cycle-type data.
ClassFunction induce_from_young(const std::vector<int>& lengths,
                                const std::vector<YoungFactor>& factors);

/// Coefficients <chi, rho_lam>; throws DomainError("not a virtual character")
/// if some inner product is not an integer.
PartitionVector decompose(const ClassFunction& chi);

}  // namespace zel
