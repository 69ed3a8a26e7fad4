#include "zel/hecke.hpp"

#include <algorithm>

namespace zel {

namespace {

const IntPolynomial kQ = IntPolynomial::monomial(1, 1);
const IntPolynomial kQm1 = IntPolynomial(std::vector<long long>{-1, 1});  // q - 1

HeckeElement right_mul_gen(const HeckeElement& a, int s) {
  HeckeElement out;
  out.rank = a.rank;
  for (const auto& [u, c] : a.terms) {
    WeylElement us = compose(u, WeylElement::simple(a.rank, s));
    if (length(us) > length(u)) {
      out.add(us, c);
    } else {
      out.add(us, kQ * c);
      out.add(u, kQm1 * c);
    }
  }
  return out;
}

}  // namespace

HeckeElement HeckeElement::basis(const WeylElement& w) {
  HeckeElement h;
  h.rank = w.n();
  h.terms[w] = IntPolynomial(1);
  return h;
}

void HeckeElement::add(const WeylElement& w, const IntPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank != b.rank) throw DomainError("rank mismatch");
  HeckeElement out = a;
  for (const auto& [w, c] : b.terms) out.add(w, c);
  return out;
}

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank != b.rank) throw DomainError("rank mismatch");
  HeckeElement out;
  out.rank = a.rank;
  for (const auto& [v, rc] : b.terms) {
    HeckeElement cur;
    cur.rank = a.rank;
    for (const auto& [w, pc] : a.terms) cur.add(w, pc * rc);
    for (int s : reduced_word(v)) cur = right_mul_gen(cur, s);
    for (const auto& [w, c] : cur.terms) out.add(w, c);
  }
  return out;
}

bool in_distinguished_reps(const WeylElement& x, const std::vector<int>& J) {
  for (int s : J)
    if (right_descent(x, s)) return false;
  return true;
}

std::vector<WeylElement> distinguished_reps(int n, const std::vector<int>& J) {
  for (int s : J)
    if (s < 0 || s > n - 2) throw DomainError("distinguished_reps: J index out of range");
  std::vector<WeylElement> out;
  for (const WeylElement& w : all_elements(n))
    if (in_distinguished_reps(w, J)) out.push_back(w);
  return out;
}

DeodharCase deodhar_case(const WeylElement& x, int s, const std::vector<int>& J) {
  if (!in_distinguished_reps(x, J)) throw DomainError("deodhar_case: x is not in Y_J");
  WeylElement sx = compose(WeylElement::simple(x.n(), s), x);
  if (in_distinguished_reps(sx, J)) {
    DeodharCase c;
    c.kind = length(sx) > length(x) ? DeodharCase::Up : DeodharCase::Down;
    c.sx = std::move(sx);
    return c;
  }
  // sx = x u with u in J
  WeylElement u = compose(inverse(x), sx);
  for (int j : J) {
    if (u == WeylElement::simple(x.n(), j)) {
      DeodharCase c;
      c.kind = DeodharCase::Fold;
      c.fold_u = j;
      return c;
    }
  }
  throw std::logic_error("deodhar_case: trichotomy violated");
}

InducedModule::InducedModule(int n, std::vector<int> J, std::vector<BlockChar> chars)
    : n_(n), J_(std::move(J)), chars_(std::move(chars)) {
  std::sort(J_.begin(), J_.end());
  for (size_t i = 0; i < J_.size(); ++i) {
    if (J_[i] < 0 || J_[i] > n - 2) throw DomainError("InducedModule: J index out of range");
    if (i > 0 && J_[i] == J_[i - 1]) throw DomainError("InducedModule: duplicate J index");
  }
  for (size_t i = 0; i < J_.size(); ++i) {
    if (i > 0 && J_[i] == J_[i - 1] + 1)
      runs_.back().second = J_[i];
    else
      runs_.emplace_back(J_[i], J_[i]);
  }
  if (runs_.size() != chars_.size())
    throw DomainError("InducedModule: one block character required per run of J");
  basis_ = distinguished_reps(n_, J_);
  for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
}

int InducedModule::index(const WeylElement& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw DomainError("InducedModule: element not in Y_J");
  return it->second;
}

IntPolynomial InducedModule::block_char_value(int u) const {
  for (size_t r = 0; r < runs_.size(); ++r)
    if (runs_[r].first <= u && u <= runs_[r].second)
      return chars_[r] == BlockChar::Sign ? IntPolynomial(-1) : kQ;
  throw DomainError("InducedModule: index not in J");
}

std::vector<IntPolynomial> InducedModule::act(int s, const std::vector<IntPolynomial>& coeffs) const {
  std::vector<IntPolynomial> out(dim());
  for (int i = 0; i < dim(); ++i) {
    const IntPolynomial& c = coeffs[i];
    if (c.is_zero()) continue;
    DeodharCase dc = deodhar_case(basis_[i], s, J_);
    switch (dc.kind) {
      case DeodharCase::Up:
        out[index(dc.sx)] += c;
        break;
      case DeodharCase::Fold:
        out[i] += block_char_value(dc.fold_u) * c;
        break;
      case DeodharCase::Down:
        out[index(dc.sx)] += kQ * c;
        out[i] += kQm1 * c;
        break;
    }
  }
  return out;
}

std::vector<std::vector<IntPolynomial>> InducedModule::generator_matrix(int s) const {
  std::vector<std::vector<IntPolynomial>> m(dim(), std::vector<IntPolynomial>(dim()));
  for (int j = 0; j < dim(); ++j) {
    std::vector<IntPolynomial> e(dim());
    e[j] = IntPolynomial(1);
    std::vector<IntPolynomial> col = act(s, e);
    for (int i = 0; i < dim(); ++i) m[i][j] = std::move(col[i]);
  }
  return m;
}

std::pair<int, int> InducedModule::act_q1(int s, int idx) const {
  DeodharCase dc = deodhar_case(basis_[idx], s, J_);
  switch (dc.kind) {
    case DeodharCase::Up:
    case DeodharCase::Down:
      return {index(dc.sx), 1};
    case DeodharCase::Fold:
      return {idx, block_char_value(dc.fold_u).eval(1) < 0 ? -1 : 1};
  }
  throw std::logic_error("unreachable");
}

InducedElement act_on_induced(const InducedModule& mod, int s, const InducedElement& elt) {
  std::vector<IntPolynomial> coeffs(mod.dim());
  for (const auto& [x, c] : elt) coeffs[mod.index(x)] = c;
  std::vector<IntPolynomial> out = mod.act(s, coeffs);
  InducedElement res;
  for (int i = 0; i < mod.dim(); ++i)
    if (!out[i].is_zero()) res[mod.basis()[i]] = std::move(out[i]);
  return res;
}

PartitionVector specialize_q1_decompose(const InducedModule& mod) {
  ClassFunction chi;
  chi.n = mod.n();
  for (const Partition& nu : partitions_of(mod.n())) {
    std::vector<int> word = reduced_word(permutation_of_type(nu));
    long long trace = 0;
    for (int i = 0; i < mod.dim(); ++i) {
      int cur = i, sign = 1;
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto [nxt, sg] = mod.act_q1(*it, cur);
        cur = nxt;
        sign *= sg;
      }
      if (cur == i) trace += sign;
    }
    chi.values[nu] = trace;
  }
  return decompose(chi);
}

InducedModule all_sign_module(const std::vector<int>& lengths) {
  if (lengths.empty()) throw DomainError("all_sign_module: empty lengths");
  int n = 0;
  std::vector<int> J;
  for (int l : lengths) {
    if (l < 1) throw DomainError("all_sign_module: lengths must be positive");
    for (int i = 1; i < l; ++i) J.push_back(n + i - 1);
    n += l;
  }
  size_t runs = 0;
  for (int l : lengths)
    if (l > 1) ++runs;
  return InducedModule(n, std::move(J), std::vector<BlockChar>(runs, BlockChar::Sign));
}

namespace {

using Matrix = std::vector<std::vector<IntPolynomial>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const size_t n = a.size();
  Matrix c(n, std::vector<IntPolynomial>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        c[i][j] += a[i][k] * b[k][j];
      }
    }
  return c;
}

bool mat_eq(const Matrix& a, const Matrix& b) { return a == b; }

bool is_zero_matrix(const Matrix& a) {
  for (const auto& row : a)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

Matrix mat_add_scalar_identity(Matrix a, const IntPolynomial& c) {
  for (size_t i = 0; i < a.size(); ++i) a[i][i] += c;
  return a;
}

}  // namespace

bool verify_hecke_relations(int n, std::ostream* log) {
  bool ok = true;
  auto report = [&](const std::string& what) {
    ok = false;
    if (log) *log << "FAIL " << what << "\n";
  };
  const int gens = n - 1;
  for (int mask = 0; mask < (1 << gens); ++mask) {
    std::vector<int> J;
    for (int s = 0; s < gens; ++s)
      if (mask & (1 << s)) J.push_back(s);
    // count runs
    int runs = 0;
    for (size_t i = 0; i < J.size(); ++i)
      if (i == 0 || J[i] != J[i - 1] + 1) ++runs;
    for (int pat = 0; pat < (1 << runs); ++pat) {
      std::vector<BlockChar> chars;
      for (int r = 0; r < runs; ++r)
        chars.push_back((pat >> r) & 1 ? BlockChar::Trivial : BlockChar::Sign);
      InducedModule mod(n, J, chars);
      std::vector<Matrix> m;
      for (int s = 0; s < gens; ++s) m.push_back(mod.generator_matrix(s));
      for (int s = 0; s < gens; ++s) {
        // (T_s - q)(T_s + 1) = 0
        Matrix quad = mat_mul(mat_add_scalar_identity(m[s], IntPolynomial::monomial(-1, 1)),
                              mat_add_scalar_identity(m[s], IntPolynomial(1)));
        if (!is_zero_matrix(quad))
          report("quadratic relation, n=" + std::to_string(n) + " J mask=" + std::to_string(mask) +
                 " s=" + std::to_string(s + 1));
      }
      for (int s = 0; s < gens; ++s)
        for (int t = s + 1; t < gens; ++t) {
          bool good;
          if (t == s + 1)
            good = mat_eq(mat_mul(mat_mul(m[s], m[t]), m[s]), mat_mul(mat_mul(m[t], m[s]), m[t]));
          else
            good = mat_eq(mat_mul(m[s], m[t]), mat_mul(m[t], m[s]));
          if (!good)
            report("braid relation, n=" + std::to_string(n) + " J mask=" + std::to_string(mask) +
                   " (s,t)=(" + std::to_string(s + 1) + "," + std::to_string(t + 1) + ")");
        }
    }
  }
  return ok;
}

}  // namespace zel
