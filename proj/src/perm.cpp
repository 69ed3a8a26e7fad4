#include "zel/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zel {

WeylElement::WeylElement(std::vector<int> p) : perm(std::move(p)) {
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= n() || seen[v]) throw DomainError("WeylElement: not a permutation");
    seen[v] = true;
  }
}

WeylElement WeylElement::identity(int n) {
  WeylElement w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

WeylElement WeylElement::simple(int n, int s) {
  if (s < 0 || s >= n - 1) throw DomainError("WeylElement: simple reflection out of range");
  WeylElement w = identity(n);
  std::swap(w.perm[s], w.perm[s + 1]);
  return w;
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (perm[i] != i) return false;
  return true;
}

std::string WeylElement::str() const {
  std::ostringstream os;
  for (int i = 0; i < n(); ++i) {
    if (i) os << ",";
    os << perm[i] + 1;
  }
  return os.str();
}

WeylElement WeylElement::parse(const std::string& text) {
  std::vector<int> p;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad permutation entry '" + tok + "'");
    }
    if (pos != tok.size() || v < 1) throw std::invalid_argument("bad permutation entry '" + tok + "'");
    p.push_back(v - 1);
  }
  if (p.empty()) throw std::invalid_argument("empty permutation literal '" + text + "'");
  try {
    return WeylElement(std::move(p));
  } catch (const DomainError&) {
    throw std::invalid_argument("'" + text + "' is not a permutation");
  }
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  if (a.n() != b.n()) throw DomainError("rank mismatch");
  WeylElement c;
  c.perm.resize(a.n());
  for (int i = 0; i < a.n(); ++i) c.perm[i] = a.perm[b.perm[i]];
  return c;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement v;
  v.perm.resize(w.n());
  for (int i = 0; i < w.n(); ++i) v.perm[w.perm[i]] = i;
  return v;
}

int length(const WeylElement& w) {
  int inv = 0;
  for (int i = 0; i < w.n(); ++i)
    for (int j = i + 1; j < w.n(); ++j)
      if (w.perm[i] > w.perm[j]) ++inv;
  return inv;
}

bool left_descent(const WeylElement& w, int s) {
  // l(s_s w) < l(w) iff value s+1 appears before value s
  if (s < 0 || s >= w.n() - 1) throw DomainError("left_descent: index out of range");
  const auto& p = w.perm;
  for (int i = 0; i < w.n(); ++i) {
    if (p[i] == s) return false;
    if (p[i] == s + 1) return true;
  }
  throw DomainError("left_descent: index out of range");
}

bool right_descent(const WeylElement& w, int s) {
  if (s < 0 || s >= w.n() - 1) throw DomainError("right_descent: index out of range");
  return w.perm[s] > w.perm[s + 1];
}

std::vector<int> reduced_word(const WeylElement& w) {
  std::vector<int> word;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    int s = -1;
    for (int i = 0; i + 1 < cur.n(); ++i)
      if (cur.perm[i] > cur.perm[i + 1]) { s = i; break; }
    word.push_back(s);
    std::swap(cur.perm[s], cur.perm[s + 1]);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool bruhat_leq(const WeylElement& x, const WeylElement& w) {
  if (x.n() != w.n()) throw DomainError("rank mismatch");
  // subword products of a reduced word for w form the lower Bruhat interval
  std::set<std::vector<int>> reachable;
  reachable.insert(WeylElement::identity(w.n()).perm);
  for (int s : reduced_word(w)) {
    std::set<std::vector<int>> next = reachable;
    for (const auto& p : reachable) {
      std::vector<int> q = p;
      std::swap(q[s], q[s + 1]);  // right multiply by s
      next.insert(std::move(q));
    }
    reachable = std::move(next);
  }
  return reachable.count(x.perm) > 0;
}

std::vector<WeylElement> all_elements(int n) {
  std::vector<WeylElement> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    WeylElement w;
    w.perm = p;
    out.push_back(std::move(w));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Partition cycle_type(const WeylElement& w) {
  std::vector<bool> seen(w.n(), false);
  std::vector<int> cycles;
  for (int i = 0; i < w.n(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = w.perm[j];
      ++len;
    }
    cycles.push_back(len);
  }
  return Partition::from_unsorted(std::move(cycles));
}

WeylElement permutation_of_type(const Partition& cycleType) {
  WeylElement w;
  int off = 0;
  for (int len : cycleType.parts()) {
    for (int i = 0; i < len; ++i) w.perm.push_back(off + (i + 1) % len);
    off += len;
  }
  return w;
}

}  // namespace zel
