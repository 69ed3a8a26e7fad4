#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zel/errors.hpp"
#include "zel/partition.hpp"

namespace zel {

/// Element of the Weyl group S_n in one-line notation.
/// Internally 0-based: perm[i] is the image of position i.  The simple
/// reflection s_i (i = 0..n-2 internally, s_1..s_{n-1} externally) swaps
/// positions i and i+1.
struct WeylElement {
  std::vector<int> perm;

  WeylElement() = default;
  explicit WeylElement(std::vector<int> p);  // validates bijection

  static WeylElement identity(int n);
  static WeylElement simple(int n, int s);  // s internal, 0..n-2

  int n() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;

  /// One-line text form, 1-based: "3,1,2".
  std::string str() const;
  static WeylElement parse(const std::string& text);

  bool operator==(const WeylElement& o) const = default;
  auto operator<=>(const WeylElement& o) const { return perm <=> o.perm; }
};

WeylElement compose(const WeylElement& a, const WeylElement& b);  // a after b
WeylElement inverse(const WeylElement& w);

/// Inversion count.
int length(const WeylElement& w);

bool left_descent(const WeylElement& w, int s);   // l(s w) < l(w)
bool right_descent(const WeylElement& w, int s);  // l(w s) < l(w)

/// Reduced word for w built by the leftmost right-descent rule; w equals the
/// product of simple(s) over the returned indices, left to right.
std::vector<int> reduced_word(const WeylElement& w);

/// Bruhat order via the subword criterion on reduced_word(w).
bool bruhat_leq(const WeylElement& x, const WeylElement& w);

/// All n! elements.
std::vector<WeylElement> all_elements(int n);

/// Cycle type of w as a partition of n.
Partition cycle_type(const WeylElement& w);

/// A canonical permutation with the given cycle type (consecutive cycles).
WeylElement permutation_of_type(const Partition& cycleType);

struct WeylElementHash {
  size_t operator()(const WeylElement& w) const {
    size_t h = 1469598103934665603ull;
    for (int v : w.perm) h = (h ^ static_cast<size_t>(v)) * 1099511628211ull;
    return h;
  }
};

}  // namespace zel
