#include "zel/multisegment.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace zel {

bool linked(const Segment& a, const Segment& b) {
  if (a.contains(b) || b.contains(a)) return false;
  // union is an interval iff they overlap or abut
  const int lo = std::max(a.start, b.start);
  const int hi = std::min(a.end, b.end);
  return lo <= hi + 1;
}

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  std::sort(segs_.begin(), segs_.end());
}

int Multisegment::support_size() const {
  int total = 0;
  for (const Segment& s : segs_) total += s.len();
  return total;
}

std::map<int, int> Multisegment::support() const {
  std::map<int, int> out;
  for (const Segment& s : segs_)
    for (int v = s.start; v <= s.end; ++v) ++out[v];
  return out;
}

std::vector<int> Multisegment::lengths() const {
  std::vector<int> out;
  out.reserve(segs_.size());
  for (const Segment& s : segs_) out.push_back(s.len());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string Multisegment::str() const {
  if (segs_.empty()) return "(empty)";
  std::ostringstream os;
  for (size_t i = 0; i < segs_.size(); ++i) {
    if (i) os << '+';
    if (segs_[i].start == segs_[i].end)
      os << '[' << segs_[i].start << ']';
    else
      os << '[' << segs_[i].start << ',' << segs_[i].end << ']';
  }
  return os.str();
}

Multisegment Multisegment::parse(const std::string& text) {
  std::vector<Segment> segs;
  size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid multisegment literal \"" + text + "\": " + why);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected integer at position " + std::to_string(start));
    return std::stoi(text.substr(start, pos - start));
  };
  skip_ws();
  if (pos == text.size()) fail("empty literal");
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    int b = read_int();
    int e = b;
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      e = read_int();
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
    ++pos;
    if (b > e) fail("segment start exceeds end");
    segs.emplace_back(b, e);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '+') fail("expected '+' between segments");
    ++pos;
  }
  return Multisegment(std::move(segs));
}

std::vector<Multisegment> elementary_ops(const Multisegment& a) {
  const auto& segs = a.segments();
  std::set<Multisegment> out;
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j) {
      if (!linked(segs[i], segs[j])) continue;
      std::vector<Segment> next;
      next.reserve(segs.size());
      for (size_t k = 0; k < segs.size(); ++k)
        if (k != i && k != j) next.push_back(segs[k]);
      const Segment uni(std::min(segs[i].start, segs[j].start),
                        std::max(segs[i].end, segs[j].end));
      next.push_back(uni);
      const int lo = std::max(segs[i].start, segs[j].start);
      const int hi = std::min(segs[i].end, segs[j].end);
      if (lo <= hi) next.emplace_back(lo, hi);
      out.insert(Multisegment(std::move(next)));
    }
  return {out.begin(), out.end()};
}

namespace {

long long sq_length_sum(const Multisegment& a) {
  long long s = 0;
  for (const Segment& seg : a.segments()) s += 1ll * seg.len() * seg.len();
  return s;
}

void check_same_support(const Multisegment& b, const Multisegment& a) {
  if (b.support() != a.support()) throw DomainError("different cuspidal support");
}

void check_cap(const Multisegment& a, int cap) {
  if (a.support_size() > cap)
    throw DomainError("support size " + std::to_string(a.support_size()) +
                      " exceeds the poset cap of " + std::to_string(cap));
}

}  // namespace

bool leq(const Multisegment& b, const Multisegment& a, int cap) {
  check_same_support(b, a);
  check_cap(a, cap);
  std::set<Multisegment> seen{a};
  std::deque<Multisegment> queue{a};
  while (!queue.empty()) {
    Multisegment cur = std::move(queue.front());
    queue.pop_front();
    if (cur == b) return true;
    for (Multisegment& next : elementary_ops(cur))
      if (seen.insert(next).second) queue.push_back(std::move(next));
  }
  return false;
}

MultisegmentPoset build_poset(const Multisegment& a, int cap) {
  check_cap(a, cap);
  std::set<Multisegment> seen{a};
  std::deque<Multisegment> queue{a};
  std::set<std::pair<Multisegment, Multisegment>> edgeSet;
  while (!queue.empty()) {
    Multisegment cur = std::move(queue.front());
    queue.pop_front();
    const long long base = sq_length_sum(cur);
    for (Multisegment& next : elementary_ops(cur)) {
      if (sq_length_sum(next) <= base)
        throw std::logic_error("elementary operation failed to increase sum of squared lengths");
      edgeSet.emplace(cur, next);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  MultisegmentPoset poset;
  poset.nodes.assign(seen.begin(), seen.end());
  std::sort(poset.nodes.begin(), poset.nodes.end(),
            [](const Multisegment& x, const Multisegment& y) {
              const long long sx = sq_length_sum(x), sy = sq_length_sum(y);
              return sx != sy ? sx < sy : x.str() < y.str();
            });
  for (size_t i = 0; i < poset.nodes.size(); ++i)
    poset.index[poset.nodes[i]] = static_cast<int>(i);
  for (const auto& [from, to] : edgeSet)
    poset.edges.emplace_back(poset.index.at(from), poset.index.at(to));
  std::sort(poset.edges.begin(), poset.edges.end());
  return poset;
}

Partition partition_P(const Multisegment& a) {
  if (a.empty()) throw DomainError("partition_P: empty multisegment");
  return Partition(a.lengths()).conjugate();
}

WeylElement encode_permutation(const Multisegment& a) {
  if (a.empty()) throw DomainError("encode_permutation: empty multisegment");
  const std::map<int, int> sup = a.support();
  const int r = static_cast<int>(sup.size());
  std::map<int, int> blockOf;  // support value -> block index
  std::vector<int> mult(r), offset(r);
  {
    int i = 0, off = 0;
    for (const auto& [v, d] : sup) {
      blockOf[v] = i;
      mult[i] = d;
      offset[i] = off;
      off += d;
      ++i;
    }
  }
  // Block content matrix: each segment walks its points forward and closes a
  // cycle back to its start.
  std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
  for (const Segment& seg : a.segments()) {
    for (int v = seg.start; v < seg.end; ++v) {
      if (!blockOf.count(v + 1))
        throw std::logic_error("encode_permutation: support gap inside a segment");
      ++c[blockOf.at(v)][blockOf.at(v + 1)];
    }
    ++c[blockOf.at(seg.end)][blockOf.at(seg.start)];
  }
  // Maximal-length representative of the double coset with these block
  // counts: within each row block assign column blocks in decreasing order,
  // and within each column block give earlier row blocks the larger values.
  std::vector<int> colTop(r);
  for (int j = 0; j < r; ++j) colTop[j] = offset[j] + mult[j] - 1;
  const int n = a.support_size();
  std::vector<int> perm(n, -1);
  for (int i = 0; i < r; ++i) {
    int pos = offset[i];
    for (int j = r - 1; j >= 0; --j)
      for (int k = 0; k < c[i][j]; ++k) perm[pos++] = colTop[j]--;
  }
  return WeylElement(std::move(perm));
}

namespace {

// Per-thread persistent memo tables: no locking inside parallel fills, and
// repeated poset computations on the same rank reuse earlier recursions.
KLTable& thread_kl_table(const SymmetricGroup& g) {
  thread_local std::map<int, std::unique_ptr<KLTable>> tables;
  auto it = tables.find(g.rank());
  if (it == tables.end())
    it = tables.emplace(g.rank(), std::make_unique<KLTable>(g)).first;
  return *it->second;
}

}  // namespace

long long decomposition_number(const Multisegment& b, const Multisegment& a, KLTable& kl) {
  check_same_support(b, a);
  const WeylElement wa = encode_permutation(a);
  const WeylElement wb = encode_permutation(b);
  const SymmetricGroup& g = SymmetricGroup::get(wa.n());
  return kl.polynomial(g.index(wa), g.index(wb)).eval(1);
}

long long decomposition_number(const Multisegment& b, const Multisegment& a) {
  check_same_support(b, a);
  const int n = a.support_size();
  if (n > 7)
    throw DomainError("decomposition_number: support size " + std::to_string(n) +
                      " exceeds the Kazhdan-Lusztig backend cap of 7");
  return decomposition_number(b, a, thread_kl_table(SymmetricGroup::get(n)));
}

std::vector<std::vector<long long>> m_matrix_serial(const MultisegmentPoset& poset) {
  const int k = static_cast<int>(poset.nodes.size());
  std::vector<std::vector<long long>> m(k, std::vector<long long>(k, 0));
  if (k == 0) return m;
  const int n = poset.nodes[0].support_size();
  if (n > 7)
    throw DomainError("m_matrix: support size " + std::to_string(n) +
                      " exceeds the Kazhdan-Lusztig backend cap of 7");
  const SymmetricGroup& g = SymmetricGroup::get(n);
  std::vector<int> w(k);
  for (int i = 0; i < k; ++i) w[i] = g.index(encode_permutation(poset.nodes[i]));
  KLTable kl(g);  // fresh table: independent of the cached parallel path
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) m[i][j] = kl.polynomial(w[j], w[i]).eval(1);
  return m;
}

std::vector<std::vector<long long>> m_matrix(const MultisegmentPoset& poset) {
  const int k = static_cast<int>(poset.nodes.size());
  std::vector<std::vector<long long>> m(k, std::vector<long long>(k, 0));
  if (k == 0) return m;
  const int n = poset.nodes[0].support_size();
  if (n > 7)
    throw DomainError("m_matrix: support size " + std::to_string(n) +
                      " exceeds the Kazhdan-Lusztig backend cap of 7");
  const SymmetricGroup& g = SymmetricGroup::get(n);
  std::vector<int> w(k);
  for (int i = 0; i < k; ++i) w[i] = g.index(encode_permutation(poset.nodes[i]));
#ifdef _OPENMP
  std::exception_ptr err;
#pragma omp parallel
  {
    KLTable& kl = thread_kl_table(g);
#pragma omp for schedule(dynamic)
    for (int j = 0; j < k; ++j) {
      try {
        for (int i = 0; i < k; ++i) m[i][j] = kl.polynomial(w[j], w[i]).eval(1);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
#else
  KLTable& kl = thread_kl_table(g);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) m[i][j] = kl.polynomial(w[j], w[i]).eval(1);
#endif
  return m;
}

Multisegment zelevinsky_dual(const Multisegment& a) {
  std::vector<Segment> work(a.segments().begin(), a.segments().end());
  std::vector<Segment> out;
  while (!work.empty()) {
    int e = std::numeric_limits<int>::min();
    for (const Segment& s : work) e = std::max(e, s.end);
    int cur = e;
    int prevStart = std::numeric_limits<int>::max();
    while (true) {
      // among segments ending at cur with start strictly left of the previous
      // pick, take the rightmost start
      int best = -1;
      for (int i = 0; i < static_cast<int>(work.size()); ++i) {
        if (work[i].end != cur || work[i].start >= prevStart) continue;
        if (best < 0 || work[i].start > work[best].start) best = i;
      }
      if (best < 0) break;
      prevStart = work[best].start;
      if (work[best].start == work[best].end)
        work.erase(work.begin() + best);
      else
        work[best].end -= 1;
      --cur;
    }
    out.emplace_back(cur + 1, e);
  }
  return Multisegment(std::move(out));
}

std::string poset_dot(const MultisegmentPoset& poset) {
  std::ostringstream os;
  os << "digraph poset {\n";
  for (size_t i = 0; i < poset.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << poset.nodes[i].str() << "\"];\n";
  for (const auto& [from, to] : poset.edges)
    os << "  n" << from << " -> n" << to << ";\n";
  os << "}\n";
  return os.str();
}

std::string poset_json(const MultisegmentPoset& poset,
                       const std::vector<std::vector<long long>>& m) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const Multisegment& node : poset.nodes) j["nodes"].push_back(node.str());
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [from, to] : poset.edges) j["edges"].push_back({from, to});
  j["m_values"] = m;
  return j.dump();
}

}  // namespace zel
