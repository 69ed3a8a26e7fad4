#include "zel/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zel {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("Partition: parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  out.resize(parts_[0]);
  for (int col = 0; col < parts_[0]; ++col) {
    int cnt = 0;
    for (int p : parts_)
      if (p > col) ++cnt;
    out[col] = cnt;
  }
  return Partition(std::move(out));
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  if (text == "-") return Partition();
  std::vector<int> parts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + tok + "'");
    }
    if (pos != tok.size() || v < 1)
      throw std::invalid_argument("bad partition part '" + tok + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("empty partition literal '" + text + "'");
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw std::invalid_argument(std::string(e.what()) + " in '" + text + "'");
  }
}

bool dominates(const Partition& lam, const Partition& mu) {
  if (lam.n() != mu.n()) throw DomainError("incomparable sizes");
  long long sl = 0, sm = 0;
  int rows = std::max(lam.rows(), mu.rows());
  for (int i = 0; i < rows; ++i) {
    sl += lam.part(i);
    sm += mu.part(i);
    if (sl < sm) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

// Counts chains empty = nu^0 < nu^1 < ... < nu^k = shape where each step adds
// a horizontal strip of size content[i].  Bijective with SSYT of the given
// shape and content.
long long count_strip_chains(const std::vector<int>& shape, const std::vector<int>& content,
                             std::vector<int>& cur, size_t step) {
  if (step == content.size()) {
    for (size_t r = 0; r < shape.size(); ++r)
      if (cur[r] != shape[r]) return 0;
    return 1;
  }
  long long total = 0;
  // choose add[r] per row; new[r] <= shape[r], and new[r] <= prev[r-1] for
  // r > 0 (prev is the partition before this strip — column strictness)
  const std::vector<int> prev = cur;
  std::function<void(size_t, int)> place = [&](size_t row, int remaining) {
    if (row == shape.size()) {
      if (remaining == 0) total += count_strip_chains(shape, content, cur, step + 1);
      return;
    }
    int cap = shape[row] - cur[row];
    if (row > 0) cap = std::min(cap, prev[row - 1] - cur[row]);
    int old = cur[row];
    for (int add = 0; add <= std::min(cap, remaining); ++add) {
      cur[row] = old + add;
      place(row + 1, remaining - add);
    }
    cur[row] = old;
  };
  place(0, content[step]);
  return total;
}

}  // namespace

long long kostka_ssyt(const Partition& shape, const Partition& content) {
  if (shape.n() != content.n()) throw DomainError("incomparable sizes");
  if (shape.n() == 0) return 1;
  if (!dominates(shape, content)) return 0;
  std::vector<int> cur(shape.rows(), 0);
  return count_strip_chains(shape.parts(), content.parts(), cur, 0);
}

void PartitionVector::add(const Partition& p, long long coeff) {
  if (p.n() != n_) throw DomainError("PartitionVector: partition of wrong size");
  if (coeff == 0) return;
  auto [it, inserted] = entries_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) entries_.erase(it);
  }
}

long long PartitionVector::coeff(const Partition& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? 0 : it->second;
}

std::string PartitionVector::json() const {
  std::ostringstream os;
  os << "{\"n\":" << n_ << ",\"entries\":[";
  bool first = true;
  for (const auto& [p, c] : entries_) {
    if (!first) os << ",";
    first = false;
    os << "{\"partition\":[";
    for (size_t i = 0; i < p.parts().size(); ++i) {
      if (i) os << ",";
      os << p.parts()[i];
    }
    os << "],\"coeff\":" << c << "}";
  }
  os << "]}";
  return os.str();
}

PartitionVector pieri_sign_step(const PartitionVector& acc, int l) {
  if (l < 1) throw DomainError("pieri_sign_step: l must be positive");
  PartitionVector out(acc.n() + l);
  for (const auto& [lam, c] : acc.entries()) {
    // vertical strip: pick l distinct rows, each receiving one box; scan rows
    // top to bottom so each result appears exactly once
    int rows = lam.rows() + l;  // rows below lam.rows() start at length 0
    std::vector<int> cur(lam.parts());
    cur.resize(rows, 0);
    std::function<void(int, int)> rec = [&](int row, int remaining) {
      if (remaining == 0) {
        std::vector<int> parts(cur);
        std::erase(parts, 0);
        out.add(Partition(std::move(parts)), c);
        return;
      }
      if (row >= rows) return;
      rec(row + 1, remaining);
      // add one box to this row if the result stays a partition
      int bound = row == 0 ? cur[0] + 1 : cur[row - 1];
      if (cur[row] + 1 <= bound) {
        cur[row] += 1;
        rec(row + 1, remaining - 1);
        cur[row] -= 1;
      }
    };
    rec(0, l);
  }
  return out;
}

PartitionVector sign_induction_multiplicities(const std::vector<int>& lengths) {
  if (lengths.empty()) throw DomainError("sign_induction_multiplicities: empty lengths");
  PartitionVector acc(0);
  acc.add(Partition(), 1);
  for (int l : lengths) acc = pieri_sign_step(acc, l);

  const Partition lambda = Partition::from_unsorted(lengths).conjugate();
  const Partition lambdaConj = lambda.conjugate();
  PartitionVector viaKostka(acc.n());
  for (const Partition& tau : partitions_of(acc.n()))
    viaKostka.add(tau, kostka_ssyt(tau.conjugate(), lambdaConj));
  if (!(acc == viaKostka))
    throw std::logic_error("sign induction: Pieri folding disagrees with Kostka numbers");
  return acc;
}

}  // namespace zel
