// Benchmark: parallel kernels (m-matrix fill, per-constituent branch sums)
// against their serial reference implementations, with an equality check.
#include <chrono>
#include <iostream>
#include <string>

#include "zel/branching.hpp"
#include "zel/multisegment.hpp"

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string text = "[0,1]+[1,2]+[0]+[2]";  // support size 6 by default
  if (argc > 1) text = argv[1];
  const zel::Multisegment a = zel::Multisegment::parse(text);
  std::cout << "input: " << a.str() << " (support size " << a.support_size() << ")\n";

  const zel::MultisegmentPoset poset = zel::build_poset(a);
  std::cout << "poset: " << poset.nodes.size() << " nodes, " << poset.edges.size() << " edges\n";

  std::vector<std::vector<long long>> mPar, mSer;
  const double tPar = time_ms([&] { mPar = zel::m_matrix(poset); });
  const double tSer = time_ms([&] { mSer = zel::m_matrix_serial(poset); });
  std::cout << "m-matrix   parallel " << tPar << " ms, serial " << tSer << " ms, "
            << (mPar == mSer ? "results agree" : "RESULTS DIFFER") << "\n";
  if (mPar != mSer) return 1;

  zel::BranchingResult rPar, rSer;
  const double bPar = time_ms([&] { rPar = zel::branch(a); });
  const double bSer = time_ms([&] { rSer = zel::branch_serial(a); });
  std::cout << "branch     parallel " << bPar << " ms, serial " << bSer << " ms, "
            << (rPar.multiplicities == rSer.multiplicities ? "results agree" : "RESULTS DIFFER")
            << "\n";
  if (rPar.multiplicities != rSer.multiplicities) return 1;

  std::cout << "constituents: " << rPar.multiplicities.entries().size() << "\n";
  return 0;
}
