#include "zel/branching.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace zel {

namespace {

Partition lengths_partition(const std::vector<int>& lengths) {
  return Partition::from_unsorted(lengths);
}

BranchingResult certify(int n, PartitionVector mults, Partition top) {
  BranchingResult res;
  res.n = n;
  res.top = std::move(top);
  for (const auto& [mu, c] : mults.entries()) {
    if (c < 0)
      throw std::runtime_error("backend inconsistency: decomposition numbers invalid");
    if (!dominates(res.top, mu))
      throw std::logic_error("branching: constituent outside the dominance cone of P(a)");
  }
  if (mults.coeff(res.top) != 1)
    throw std::logic_error("branching: multiplicity at P(a) is not 1");
  res.multiplicities = std::move(mults);
  res.cert = {true, true, true};
  return res;
}

}  // namespace

BranchingResult generic_branching(const std::vector<int>& lengths) {
  if (lengths.empty()) throw DomainError("generic_branching: empty lengths");
  for (int l : lengths)
    if (l < 1) throw DomainError("generic_branching: lengths must be positive");
  const Partition lam = lengths_partition(lengths).conjugate();
  const int n = lam.n();
  PartitionVector byKostka(n);
  const Partition lamc = lam.conjugate();
  for (const Partition& mu : partitions_of(n)) {
    const long long k = kostka_ssyt(mu.conjugate(), lamc);
    if (k != 0) byKostka.add(mu, k);
  }
  // independent route: Pieri fold over sign blocks (itself cross-checked)
  if (byKostka != sign_induction_multiplicities(lengths))
    throw std::logic_error("generic_branching: Kostka and Pieri routes disagree");
  return certify(n, std::move(byKostka), lam);
}

std::map<Multisegment, long long> expand_in_standard_basis(const Multisegment& a, int cap) {
  const MultisegmentPoset poset = build_poset(a, cap);
  const auto m = m_matrix(poset);
  const int k = static_cast<int>(poset.nodes.size());
  // m is lower unitriangular in the node order (nodes[0] = a is maximal);
  // solve m c = e_0 by forward substitution.
  std::vector<long long> c(k, 0);
  for (int i = 0; i < k; ++i) {
    if (m[i][i] != 1) throw std::logic_error("expand_in_standard_basis: non-unit diagonal");
    long long acc = (i == 0) ? 1 : 0;
    for (int j = 0; j < i; ++j) acc -= m[i][j] * c[j];
    c[i] = acc;
  }
  std::map<Multisegment, long long> out;
  for (int i = 0; i < k; ++i)
    if (c[i] != 0) out[poset.nodes[i]] = c[i];
  return out;
}

namespace {

BranchingResult branch_impl(const Multisegment& a, int cap, bool parallel) {
  if (a.empty()) throw DomainError("branch: empty multisegment");
  const std::map<Multisegment, long long> coeffs = expand_in_standard_basis(a, cap);
  const int n = a.support_size();
  const Partition top = partition_P(a);

  // precompute P(b)' per contributing node
  std::vector<long long> cs;
  std::vector<Partition> shapes;
  for (const auto& [b, cb] : coeffs) {
    cs.push_back(cb);
    shapes.push_back(partition_P(b).conjugate());
  }
  const std::vector<Partition> mus = partitions_of(n);
  std::vector<long long> mult(mus.size(), 0);

  auto kernel = [&](int i) {
    const Partition muc = mus[i].conjugate();
    long long acc = 0;
    for (size_t b = 0; b < cs.size(); ++b) acc += cs[b] * kostka_ssyt(muc, shapes[b]);
    mult[i] = acc;
  };
  const int count = static_cast<int>(mus.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) kernel(i);
  } else {
    for (int i = 0; i < count; ++i) kernel(i);
  }

  PartitionVector mults(n);
  for (int i = 0; i < count; ++i)
    if (mult[i] != 0) mults.add(mus[i], mult[i]);
  return certify(n, std::move(mults), top);
}

}  // namespace

BranchingResult branch(const Multisegment& a, int cap) { return branch_impl(a, cap, true); }

BranchingResult branch_serial(const Multisegment& a, int cap) {
  return branch_impl(a, cap, false);
}

std::string branch_report(const Multisegment& a, int cap) {
  const MultisegmentPoset poset = build_poset(a, cap);
  const auto m = m_matrix(poset);
  const auto coeffs = expand_in_standard_basis(a, cap);
  const BranchingResult res = branch(a, cap);
  const Multisegment dual = zelevinsky_dual(a);
  const Partition dualMin = partition_P(dual).conjugate();

  nlohmann::ordered_json j;
  j["input"] = a.str();
  j["n"] = res.n;
  j["top"] = res.top.parts();
  j["multiplicities"] = nlohmann::ordered_json::parse(res.multiplicities.json());
  j["poset"] = nlohmann::ordered_json::parse(poset_json(poset, m));
  j["c_coefficients"] = nlohmann::ordered_json::array();
  for (const auto& [b, cb] : coeffs)
    j["c_coefficients"].push_back({{"multisegment", b.str()}, {"coeff", cb}});
  j["dual"] = dual.str();
  j["dual_minimal_partition"] = dualMin.parts();
  j["dual_minimal_multiplicity"] = res.multiplicities.coeff(dualMin);
  j["certified"] = {{"nonnegative", res.cert.nonnegative},
                    {"top_multiplicity_one", res.cert.top_multiplicity_one},
                    {"support_dominated", res.cert.support_dominated}};
  j["note"] =
      "multiplicities are exact conditional on the Kazhdan-Lusztig backend for "
      "the decomposition numbers m(b;a)";
  return j.dump(2);
}

}  // namespace zel
