#pragma once

// Exhaustive enumeration helpers shared by the unit and acceptance suites.

#include <map>
#include <set>
#include <vector>

#include "zel/multisegment.hpp"

namespace zel::testing {

/// All shift-normalized supports of total size n: multisets over a contiguous
/// value window starting at 0 (a global coordinate shift changes nothing
/// downstream, and a gapped support splits into independent windows).
inline std::vector<std::map<int, int>> all_supports(int n) {
  std::vector<std::map<int, int>> out;
  std::vector<int> values{0};
  auto rec = [&](auto&& self, int prev) -> void {
    if (static_cast<int>(values.size()) == n) {
      std::map<int, int> sup;
      for (int v : values) ++sup[v];
      out.push_back(std::move(sup));
      return;
    }
    for (int v = prev; v <= prev + 1; ++v) {
      values.push_back(v);
      self(self, v);
      values.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// All multisegments whose point multiset equals the given support.
inline std::vector<Multisegment> multisegments_with_support(const std::map<int, int>& support) {
  std::set<Multisegment> out;
  std::vector<Segment> acc;
  std::map<int, int> rem = support;
  auto rec = [&](auto&& self) -> void {
    // find the minimal remaining point; any segment containing it starts there
    int v = 0;
    bool found = false;
    for (const auto& [val, cnt] : rem)
      if (cnt > 0) {
        v = val;
        found = true;
        break;
      }
    if (!found) {
      out.insert(Multisegment(acc));
      return;
    }
    int consumedUpTo = v - 1;
    for (int e = v;; ++e) {
      auto it = rem.find(e);
      if (it == rem.end() || it->second == 0) break;
      --it->second;  // points v..e now consumed; stays consumed while e grows
      consumedUpTo = e;
      acc.emplace_back(v, e);
      self(self);
      acc.pop_back();
    }
    for (int u = v; u <= consumedUpTo; ++u) ++rem[u];
  };
  rec(rec);
  return {out.begin(), out.end()};
}

/// All multisegments over all shift-normalized supports of total size n.
inline std::vector<Multisegment> all_multisegments(int n) {
  std::vector<Multisegment> out;
  for (const auto& sup : all_supports(n))
    for (Multisegment& a : multisegments_with_support(sup)) out.push_back(std::move(a));
  return out;
}

inline bool pairwise_unlinked(const Multisegment& a) {
  const auto& s = a.segments();
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (linked(s[i], s[j])) return false;
  return true;
}

}  // namespace zel::testing
