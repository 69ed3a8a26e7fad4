#pragma once

#include <map>
#include <string>
#include <vector>

#include "zel/kl.hpp"
#include "zel/partition.hpp"
#include "zel/perm.hpp"

namespace zel {

/// Integer interval [start, end] on the unramified cuspidal line.
struct Segment {
  int start = 0;
  int end = 0;

  Segment() = default;
  Segment(int s, int e) : start(s), end(e) {
    if (s > e) throw DomainError("Segment: start must not exceed end");
  }
  int len() const { return end - start + 1; }
  bool contains(const Segment& o) const { return start <= o.start && o.end <= end; }
  bool operator==(const Segment& o) const = default;
  /// Canonical multiset order: descending by (start, end).
  bool operator<(const Segment& o) const {
    return start != o.start ? start > o.start : end > o.end;
  }
};

/// Neither contains the other and the union is again an interval.
bool linked(const Segment& a, const Segment& b);

/// Finite multiset of segments kept in canonical order.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segs);

  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  int size() const { return static_cast<int>(segs_.size()); }
  /// Total number of points counted with multiplicity.
  int support_size() const;
  /// Point -> multiplicity.
  std::map<int, int> support() const;
  /// Segment lengths, weakly decreasing.
  std::vector<int> lengths() const;

  /// "[0,2]+[1,1]"; singletons as "[k]".
  std::string str() const;
  static Multisegment parse(const std::string& text);

  bool operator==(const Multisegment& o) const = default;
  auto operator<=>(const Multisegment& o) const { return segs_ <=> o.segs_; }

 private:
  std::vector<Segment> segs_;
};

/// All results of one elementary operation on one linked pair, deduplicated
/// and sorted.
std::vector<Multisegment> elementary_ops(const Multisegment& a);

/// Reachability b <= a under elementary operations.  Throws
/// DomainError("different cuspidal support") on support mismatch.
bool leq(const Multisegment& b, const Multisegment& a, int cap = 12);

/// Downward closure of a under elementary operations.  nodes[0] == a and the
/// node order (increasing sum of squared lengths, then canonical text) is a
/// linear extension of >=: an edge (i, j) always has i < j.
struct MultisegmentPoset {
  std::vector<Multisegment> nodes;
  std::map<Multisegment, int> index;
  std::vector<std::pair<int, int>> edges;  // one elementary operation each
};
MultisegmentPoset build_poset(const Multisegment& a, int cap = 12);

/// Conjugate of the weakly decreasing sequence of segment lengths.
/// Throws DomainError on the empty multisegment.
Partition partition_P(const Multisegment& a);

/// Permutation in S_N (N = support size) encoding a multisegment for the
/// Kazhdan-Lusztig backend: block content from per-segment cycles, realized
/// as the maximal-length double-coset representative.  The map reverses
/// order: b <= a iff encode(a) <= encode(b) in Bruhat order.
WeylElement encode_permutation(const Multisegment& a);

/// m(b;a) = P_{encode(a), encode(b)}(1).  Throws on support mismatch; the
/// backend refuses supports with more than 7 points.
long long decomposition_number(const Multisegment& b, const Multisegment& a);
long long decomposition_number(const Multisegment& b, const Multisegment& a, KLTable& kl);

/// m-matrix over a poset: m[i][j] = m(nodes[i]; nodes[j]).  Parallel and
/// serial variants must agree; the serial one is the reference.
std::vector<std::vector<long long>> m_matrix(const MultisegmentPoset& poset);
std::vector<std::vector<long long>> m_matrix_serial(const MultisegmentPoset& poset);

/// Combinatorial Zelevinsky involution (Moeglin-Waldspurger column reading).
Multisegment zelevinsky_dual(const Multisegment& a);

/// DOT export of a poset, deterministic node order.
std::string poset_dot(const MultisegmentPoset& poset);
/// JSON {nodes, edges, m_values}.
std::string poset_json(const MultisegmentPoset& poset,
                       const std::vector<std::vector<long long>>& m);

}  // namespace zel
