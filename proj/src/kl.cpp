#include "zel/kl.hpp"

#include <algorithm>
#include <mutex>

namespace zel {

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1) throw DomainError("SymmetricGroup: rank must be positive");
  elements_ = all_elements(n);
  std::sort(elements_.begin(), elements_.end(), [](const WeylElement& a, const WeylElement& b) {
    int la = zel::length(a), lb = zel::length(b);
    return la != lb ? la < lb : a.perm < b.perm;
  });
  lengths_.resize(size());
  for (int i = 0; i < size(); ++i) {
    index_[elements_[i]] = i;
    lengths_[i] = zel::length(elements_[i]);
  }
  idIndex_ = index_.at(WeylElement::identity(n));
  longestIndex_ = size() - 1;

  leftMult_.assign(std::max(0, n - 1), std::vector<int>(size()));
  rightMult_.assign(std::max(0, n - 1), std::vector<int>(size()));
  for (int s = 0; s + 1 < n; ++s) {
    const WeylElement gen = WeylElement::simple(n, s);
    for (int i = 0; i < size(); ++i) {
      leftMult_[s][i] = index_.at(compose(gen, elements_[i]));
      rightMult_[s][i] = index_.at(compose(elements_[i], gen));
    }
  }

  // Bruhat order via rank matrices: x <= w iff every northwest count of x is
  // at most the matching count of w.
  std::vector<std::vector<int>> ranks(size(), std::vector<int>(n * n));
  for (int e = 0; e < size(); ++e) {
    const auto& p = elements_[e].perm;
    for (int j = 0; j < n; ++j) {
      int acc = 0;
      for (int i = 0; i < n; ++i) {
        acc += (p[i] >= j) ? 1 : 0;
        ranks[e][i * n + j] = acc;
      }
    }
  }
  leq_.assign(size(), std::vector<bool>(size(), false));
  for (int x = 0; x < size(); ++x)
    for (int w = 0; w < size(); ++w) {
      if (lengths_[x] > lengths_[w]) continue;
      bool ok = true;
      for (int k = 0; k < n * n && ok; ++k) ok = ranks[x][k] <= ranks[w][k];
      leq_[x][w] = ok;
    }
}

int SymmetricGroup::index(const WeylElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw DomainError("SymmetricGroup: rank mismatch");
  return it->second;
}

const SymmetricGroup& SymmetricGroup::get(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SymmetricGroup>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<SymmetricGroup>(n)).first;
  return *it->second;
}

const IntPolynomial KLTable::kZero{};
const IntPolynomial KLTable::kOne{1};

const IntPolynomial& KLTable::polynomial(int x, int w) {
  if (!g_.leq(x, w)) return kZero;
  if (x == w) return kOne;
  const uint64_t key = static_cast<uint64_t>(x) * g_.size() + w;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  int s = 0;
  while (!g_.right_descent(w, s)) ++s;
  const int v = g_.right_mult(w, s);
  const int xs = g_.right_mult(x, s);
  const int c = g_.length(xs) < g_.length(x) ? 1 : 0;

  IntPolynomial res = IntPolynomial::monomial(1, 1 - c) * polynomial(xs, v);
  res += IntPolynomial::monomial(1, c) * polynomial(x, v);
  for (int z = 0; z < g_.size(); ++z) {
    if (g_.length(z) >= g_.length(v)) continue;
    if (!g_.right_descent(z, s)) continue;
    if (!g_.leq(x, z) || !g_.leq(z, v)) continue;
    long long m = mu(z, v);
    if (m == 0) continue;
    res -= m * (IntPolynomial::monomial(1, (g_.length(w) - g_.length(z)) / 2) * polynomial(x, z));
  }
  return memo_.emplace(key, std::move(res)).first->second;
}

long long KLTable::mu(int z, int w) {
  if (z == w || !g_.leq(z, w)) return 0;
  const int d = g_.length(w) - g_.length(z);
  if (d % 2 == 0) return 0;
  return polynomial(z, w).coeff((d - 1) / 2);
}

KLBasisTable::KLBasisTable(const SymmetricGroup& g) : g_(g) { cache_.resize(g.size()); }

const KLBasisTable::Element& KLBasisTable::basis_element(int w) {
  if (cache_[w]) return *cache_[w];
  auto elem = std::make_unique<Element>();

  if (w == g_.identity()) {
    (*elem)[w] = Laurent{0, {1}};
    cache_[w] = std::move(elem);
    return *cache_[w];
  }

  int s = 0;
  while (!g_.left_descent(w, s)) ++s;
  const int u = g_.left_mult(s, w);
  // copy: recursive basis_element calls below may touch the cache
  const Element cu = basis_element(u);

  auto add = [](Element& dst, int x, const Laurent& lau, long long scale, int shift) {
    if (scale == 0 || lau.c.empty()) return;
    Laurent& tgt = dst[x];
    const int lo = std::min(tgt.c.empty() ? lau.off + shift : tgt.off, lau.off + shift);
    const int hiA = tgt.off + static_cast<int>(tgt.c.size());
    const int hiB = lau.off + shift + static_cast<int>(lau.c.size());
    const int hi = std::max(tgt.c.empty() ? hiB : hiA, hiB);
    std::vector<long long> out(hi - lo, 0);
    for (size_t i = 0; i < tgt.c.size(); ++i) out[tgt.off + static_cast<int>(i) - lo] += tgt.c[i];
    for (size_t i = 0; i < lau.c.size(); ++i)
      out[lau.off + shift + static_cast<int>(i) - lo] += scale * lau.c[i];
    // trim
    int a = 0, b = static_cast<int>(out.size());
    while (a < b && out[a] == 0) ++a;
    while (b > a && out[b - 1] == 0) --b;
    if (a == b) {
      dst.erase(x);
    } else {
      tgt.off = lo + a;
      tgt.c.assign(out.begin() + a, out.begin() + b);
    }
  };

  Element d;
  for (const auto& [x, lau] : cu) {
    const int sx = g_.left_mult(s, x);
    if (g_.length(sx) > g_.length(x)) {
      add(d, sx, lau, 1, -1);  // v^{-1} T_s T_x = v^{-1} T_{sx}
    } else {
      add(d, sx, lau, 1, 1);   // v^{-1} q T_{sx} = v T_{sx}
      add(d, x, lau, 1, 1);    // v^{-1} (q-1) T_x = (v - v^{-1}) T_x
      add(d, x, lau, -1, -1);
    }
    add(d, x, lau, 1, -1);     // the +C'_u part of v^{-1}(T_s + 1) C'_u
  }

  // subtract sum of mu(z, u) C'_z over z with sz < z
  for (const auto& [z, lau] : cu) {
    if (!g_.left_descent(z, s)) continue;
    const int target = -g_.length(z) - 1;  // v-exponent carrying mu(z, u)
    long long m = 0;
    if (target >= lau.off && target < lau.off + static_cast<int>(lau.c.size()))
      m = lau.c[target - lau.off];
    if (m == 0) continue;
    const Element& cz = basis_element(z);
    for (const auto& [x, zl] : cz) add(d, x, zl, -m, 0);
  }

  *elem = std::move(d);
  cache_[w] = std::move(elem);
  return *cache_[w];
}

IntPolynomial KLBasisTable::polynomial(int x, int w) {
  const Element& cw = basis_element(w);
  auto it = cw.find(x);
  if (it == cw.end()) return {};
  const Laurent& lau = it->second;
  std::vector<long long> coeffs;
  const int lw = g_.length(w);
  for (size_t i = 0; i < lau.c.size(); ++i) {
    if (lau.c[i] == 0) continue;
    const int e = lau.off + static_cast<int>(i) + lw;
    if (e < 0 || e % 2 != 0) throw std::logic_error("KLBasisTable: unexpected v-exponent");
    const int k = e / 2;
    if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1, 0);
    coeffs[k] = lau.c[i];
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial kl_polynomial(const WeylElement& x, const WeylElement& w) {
  if (x.n() != w.n()) throw DomainError("rank mismatch");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<KLTable>> tables;
  std::scoped_lock lock(mu);
  auto it = tables.find(x.n());
  if (it == tables.end())
    it = tables.emplace(x.n(), std::make_unique<KLTable>(SymmetricGroup::get(x.n()))).first;
  const SymmetricGroup& g = SymmetricGroup::get(x.n());
  return it->second->polynomial(g.index(x), g.index(w));
}

}  // namespace zel
