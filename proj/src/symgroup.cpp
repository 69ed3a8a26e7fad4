#include "zel/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace zel {

long long ClassFunction::at(const Partition& cycleType) const {
  auto it = values.find(cycleType);
  if (it == values.end()) throw DomainError("ClassFunction: unknown cycle type");
  return it->second;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (n != o.n) throw DomainError("ClassFunction: size mismatch");
  for (const auto& [k, v] : o.values) values[k] += v;
  return *this;
}

long long centralizer_order(const Partition& cycleType) {
  std::map<int, int> mult;
  for (int p : cycleType.parts()) ++mult[p];
  long long z = 1;
  for (auto [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= k;
    z *= factorial(m);
  }
  return z;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long standard_tableau_count(const Partition& lam) {
  if (lam.n() == 0) return 1;
  const Partition conj = lam.conjugate();
  long long num = factorial(lam.n());
  long long den = 1;
  for (int i = 0; i < lam.rows(); ++i)
    for (int j = 0; j < lam.part(i); ++j)
      den *= (lam.part(i) - j) + (conj.part(j) - i) - 1;  // hook length at (i,j)
  return num / den;
}

namespace {

// exact rational with long long; sizes here stay far below overflow
struct Fraction {
  long long num = 0, den = 1;
  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(std::abs(num), den);
    if (g > 1) { num /= g; den /= g; }
  }
  Fraction& operator+=(const Fraction& o) {
    num = num * o.den + o.num * den;
    den *= o.den;
    reduce();
    return *this;
  }
  Fraction& operator*=(const Fraction& o) {
    num *= o.num;
    den *= o.den;
    reduce();
    return *this;
  }
};

std::vector<int> beta_set(const Partition& lam, int rows) {
  std::vector<int> beta(rows);
  for (int j = 0; j < rows; ++j) beta[j] = lam.part(j) + (rows - 1 - j);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int m = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int j = 0; j < m; ++j) {
    int p = beta[j] - (m - 1 - j);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

// Murnaghan-Nakayama: sum over border-strip removals of size cycle[idx]
long long mn_value(const Partition& shape, const std::vector<int>& cycle, size_t idx,
                   std::map<std::pair<Partition, size_t>, long long>& memo) {
  if (shape.n() == 0) return 1;
  auto key = std::make_pair(shape, idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int t = cycle[idx];
  std::vector<int> beta = beta_set(shape, shape.rows());
  long long total = 0;
  for (size_t j = 0; j < beta.size(); ++j) {
    int target = beta[j] - t;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int crossings = 0;
    for (int b : beta)
      if (target < b && b < beta[j]) ++crossings;
    std::vector<int> nb = beta;
    nb[j] = target;
    long long sub = mn_value(from_beta(std::move(nb)), cycle, idx + 1, memo);
    total += (crossings % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

ClassFunction irreducible_character(const Partition& lam) {
  ClassFunction chi;
  chi.n = lam.n();
  for (const Partition& mu : partitions_of(lam.n())) {
    std::map<std::pair<Partition, size_t>, long long> memo;
    chi.values[mu] = mn_value(lam, mu.parts(), 0, memo);
  }
  if (lam.n() == 0) chi.values[Partition()] = 1;
  return chi;
}

CharacterTable::CharacterTable(int n) : n_(n), labels_(partitions_of(n)) {
  for (const Partition& lam : labels_) {
    chars_.push_back(irreducible_character(lam));
    std::vector<long long> row;
    for (const Partition& mu : labels_) row.push_back(chars_.back().values.at(mu));
    table_.push_back(std::move(row));
  }
}

const CharacterTable& CharacterTable::get(int n) {
  static std::mutex mu;
  static std::map<int, CharacterTable> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, CharacterTable(n)).first;
  return it->second;
}

ClassFunction induce_from_young(const std::vector<int>& lengths,
                                const std::vector<YoungFactor>& factors) {
  if (lengths.empty()) throw DomainError("induce_from_young: empty lengths");
  if (lengths.size() != factors.size())
    throw DomainError("induce_from_young: lengths/factors mismatch");
  for (int l : lengths)
    if (l < 1) throw DomainError("induce_from_young: lengths must be positive");
  const int n = std::accumulate(lengths.begin(), lengths.end(), 0);
  const size_t r = lengths.size();

  ClassFunction out;
  out.n = n;
  for (const Partition& nu : partitions_of(n)) {
    // distinct part values of nu with multiplicities
    std::vector<std::pair<int, int>> groups;
    for (int p : nu.parts()) {
      if (!groups.empty() && groups.back().first == p)
        ++groups.back().second;
      else
        groups.emplace_back(p, 1);
    }
    std::vector<int> capacity(lengths.begin(), lengths.end());
    std::vector<std::vector<int>> chosen(r);
    Fraction sum;

    std::function<void(size_t)> overGroups = [&](size_t g) {
      if (g == groups.size()) {
        Fraction term{1, 1};
        for (size_t i = 0; i < r; ++i) {
          Partition mi = Partition::from_unsorted(chosen[i]);
          long long chi = 1;
          if (factors[i] == YoungFactor::Sign)
            chi = ((lengths[i] - mi.rows()) % 2) ? -1 : 1;
          term *= Fraction{chi, centralizer_order(mi)};
        }
        sum += term;
        return;
      }
      auto [val, mult] = groups[g];
      // distribute `mult` copies of `val` over the factors
      std::function<void(size_t, int)> distribute = [&](size_t fac, int remaining) {
        if (fac == r) {
          if (remaining == 0) overGroups(g + 1);
          return;
        }
        int maxHere = std::min(remaining, capacity[fac] / val);
        for (int c = 0; c <= maxHere; ++c) {
          capacity[fac] -= c * val;
          for (int k = 0; k < c; ++k) chosen[fac].push_back(val);
          distribute(fac + 1, remaining - c);
          for (int k = 0; k < c; ++k) chosen[fac].pop_back();
          capacity[fac] += c * val;
        }
      };
      distribute(0, mult);
    };
    overGroups(0);

    sum *= Fraction{centralizer_order(nu), 1};
    if (sum.den != 1) throw std::logic_error("induce_from_young: non-integral value");
    out.values[nu] = sum.num;
  }
  return out;
}

PartitionVector decompose(const ClassFunction& chi) {
  const CharacterTable& table = CharacterTable::get(chi.n);
  PartitionVector out(chi.n);
  for (size_t i = 0; i < table.labels().size(); ++i) {
    Fraction inner;
    for (size_t c = 0; c < table.labels().size(); ++c) {
      const Partition& nu = table.labels()[c];
      inner += Fraction{chi.at(nu) * table.value(static_cast<int>(i), static_cast<int>(c)),
                        centralizer_order(nu)};
    }
    if (inner.den != 1) throw DomainError("not a virtual character");
    out.add(table.labels()[i], inner.num);
  }
  return out;
}

}  // namespace zel
