#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "zel/perm.hpp"
#include "zel/poly.hpp"
#include "zel/symgroup.hpp"

namespace zel {

/// Element of the generic Iwahori-Hecke algebra of S_n: finitely supported
/// combination of basis elements T_w with IntPolynomial coefficients.
struct HeckeElement {
  int rank = 0;
  std::map<WeylElement, IntPolynomial> terms;

  static HeckeElement basis(const WeylElement& w);
  void add(const WeylElement& w, const IntPolynomial& c);
  bool operator==(const HeckeElement& o) const = default;
};

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b);
/// Product determined by T_s T_w = T_{sw} if l(sw) > l(w), else
/// q T_{sw} + (q-1) T_w.  Throws DomainError on rank mismatch.
HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b);

/// Y_J membership: l(x s) > l(x) for all s in J (internal indices 0..n-2).
bool in_distinguished_reps(const WeylElement& x, const std::vector<int>& J);

/// The set Y_J of distinguished left coset representatives of W_J, sorted.
std::vector<WeylElement> distinguished_reps(int n, const std::vector<int>& J);

struct DeodharCase {
  enum Kind { Up, Down, Fold } kind;
  WeylElement sx;  // for Up/Down
  int fold_u = -1; // internal index of u in J, for Fold
};

/// Trichotomy for x in Y_J and a simple reflection s.
/// Throws DomainError if x is not in Y_J.
DeodharCase deodhar_case(const WeylElement& x, int s, const std::vector<int>& J);

enum class BlockChar { Sign, Trivial };  // T_s acts by -1 resp. q on the block

/// Parabolically induced module with one-dimensional blocks: basis
/// {T_x (x) v : x in Y_J} where v spans the one-dimensional W_J-character
/// determined by a Sign/Trivial choice per connected run of J.
class InducedModule {
 public:
  /// chars has one entry per maximal run of consecutive indices in J.
  InducedModule(int n, std::vector<int> J, std::vector<BlockChar> chars);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<int>& J() const { return J_; }
  const std::vector<WeylElement>& basis() const { return basis_; }
  int index(const WeylElement& x) const;

  /// Character value of T_u on the block containing internal index u.
  IntPolynomial block_char_value(int u) const;

  /// Action of T_s on a coefficient vector in the T_x basis.
  std::vector<IntPolynomial> act(int s, const std::vector<IntPolynomial>& coeffs) const;

  /// dim x dim matrix of T_s (row = output index).
  std::vector<std::vector<IntPolynomial>> generator_matrix(int s) const;

  /// q = 1 action on a basis element: returns (index, sign).
  std::pair<int, int> act_q1(int s, int idx) const;

 private:
  int n_;
  std::vector<int> J_;
  std::vector<std::pair<int, int>> runs_;  // inclusive index ranges within J
  std::vector<BlockChar> chars_;
  std::vector<WeylElement> basis_;
  std::map<WeylElement, int> index_;
};

/// Module element as a map from distinguished representatives to
/// coefficients (one-dimensional blocks, so scalars).
using InducedElement = std::map<WeylElement, IntPolynomial>;
InducedElement act_on_induced(const InducedModule& mod, int s, const InducedElement& elt);

/// Specializes q = 1, reads the action as a W-representation, and decomposes
/// its character with the symmetric-group machinery.
PartitionVector specialize_q1_decompose(const InducedModule& mod);

/// All-sign induced module for a composition of n (blocks of the given sizes).
InducedModule all_sign_module(const std::vector<int>& lengths);

/// Quadratic and braid relation checks on generator matrices as exact
/// polynomial identities, over all J and all block-character patterns.
/// Logs one line per failure if log is non-null.
bool verify_hecke_relations(int n, std::ostream* log = nullptr);

}  // namespace zel
