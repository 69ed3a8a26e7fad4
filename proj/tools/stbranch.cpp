#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zel/branching.hpp"
#include "zel/hecke.hpp"
#include "zel/kl.hpp"
#include "zel/multisegment.hpp"
#include "zel/partition.hpp"
#include "zel/symgroup.hpp"

namespace {

using nlohmann::ordered_json;

std::vector<int> parse_lengths(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("invalid length list \"" + text + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("invalid length list \"" + text + "\"");
  return out;
}

void print_partition_vector(const zel::PartitionVector& pv, const std::string& format) {
  if (format == "json") {
    std::cout << pv.json() << "\n";
    return;
  }
  if (pv.entries().empty()) {
    std::cout << "(no constituents)\n";
    return;
  }
  for (const auto& [p, c] : pv.entries()) std::cout << p.str() << " : " << c << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact branching-law calculator for Iwahori-spherical representations"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  int cap = 12;
  app.add_option("--cap", cap, "poset support-size cap")->capture_default_str();

  // partition conjugate / dominates
  auto* partitionCmd = app.add_subcommand("partition", "partition utilities");
  partitionCmd->require_subcommand(1);
  std::string p1, p2;
  auto* conjCmd = partitionCmd->add_subcommand("conjugate", "conjugate a partition");
  conjCmd->add_option("partition", p1, "partition, e.g. \"3,2,1\"")->required();
  auto* domCmd = partitionCmd->add_subcommand("dominates", "dominance comparison");
  domCmd->add_option("lambda", p1)->required();
  domCmd->add_option("mu", p2)->required();

  auto* kostkaCmd = app.add_subcommand("kostka", "Kostka number K_{shape,content}");
  std::string shapeArg, contentArg;
  kostkaCmd->add_option("shape", shapeArg)->required();
  kostkaCmd->add_option("content", contentArg)->required();

  auto* genericCmd = app.add_subcommand("generic", "generic branching for segment lengths");
  std::string lengthsArg;
  genericCmd->add_option("lengths", lengthsArg, "comma-separated lengths, e.g. \"2,1\"")
      ->required();

  auto* msegCmd = app.add_subcommand("mseg", "multisegment utilities");
  msegCmd->require_subcommand(1);
  std::string msegArg;
  bool wantDot = false;
  auto* posetCmd = msegCmd->add_subcommand("poset", "poset of all b <= a");
  posetCmd->add_option("multisegment", msegArg)->required();
  posetCmd->add_flag("--dot", wantDot, "emit DOT");
  auto* dualCmd = msegCmd->add_subcommand("dual", "Zelevinsky dual");
  dualCmd->add_option("multisegment", msegArg)->required();
  auto* partCmd = msegCmd->add_subcommand("partition", "partition P(a)");
  partCmd->add_option("multisegment", msegArg)->required();

  auto* mCmd = app.add_subcommand("m", "decomposition number m(b;a)");
  std::string bArg, aArg;
  mCmd->add_option("b", bArg)->required();
  mCmd->add_option("a", aArg)->required();

  auto* branchCmd = app.add_subcommand("branch", "branching law of St(<a>)^{K_+}");
  branchCmd->add_option("multisegment", aArg)->required();

  auto* klCmd = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
  int klN = 0;
  std::string xArg, wArg;
  klCmd->add_option("--n", klN, "rank")->required();
  klCmd->add_option("--x", xArg, "one-line permutation, e.g. \"2,1,3,4\"")->required();
  klCmd->add_option("--w", wArg, "one-line permutation")->required();

  auto* heckeCmd = app.add_subcommand("hecke", "Hecke-algebra checks");
  heckeCmd->require_subcommand(1);
  auto* verifyCmd = heckeCmd->add_subcommand("verify", "quadratic and braid relations");
  int heckeN = 0;
  verifyCmd->add_option("--n", heckeN, "rank")->required();

  auto* symCmd = app.add_subcommand("symgroup", "symmetric-group utilities");
  symCmd->require_subcommand(1);
  auto* tableCmd = symCmd->add_subcommand("table", "character table as JSON");
  int symN = 0;
  tableCmd->add_option("n", symN)->required();

  // allow --format / --cap after the subcommand as well
  std::function<void(CLI::App*)> enableFallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands({})) {
      sub->fallthrough();
      enableFallthrough(sub);
    }
  };
  enableFallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*conjCmd) {
    std::cout << zel::Partition::parse(p1).conjugate().str() << "\n";
  } else if (*domCmd) {
    std::cout << (zel::dominates(zel::Partition::parse(p1), zel::Partition::parse(p2)) ? "true"
                                                                                       : "false")
              << "\n";
  } else if (*kostkaCmd) {
    std::cout << zel::kostka_ssyt(zel::Partition::parse(shapeArg),
                                  zel::Partition::parse(contentArg))
              << "\n";
  } else if (*genericCmd) {
    print_partition_vector(zel::generic_branching(parse_lengths(lengthsArg)).multiplicities,
                           format);
  } else if (*posetCmd) {
    const auto poset = zel::build_poset(zel::Multisegment::parse(msegArg), cap);
    if (wantDot) {
      std::cout << zel::poset_dot(poset);
    } else if (format == "json") {
      std::cout << zel::poset_json(poset, zel::m_matrix(poset)) << "\n";
    } else {
      for (size_t i = 0; i < poset.nodes.size(); ++i)
        std::cout << i << ": " << poset.nodes[i].str() << "\n";
      for (const auto& [from, to] : poset.edges) std::cout << from << " -> " << to << "\n";
    }
  } else if (*dualCmd) {
    std::cout << zel::zelevinsky_dual(zel::Multisegment::parse(msegArg)).str() << "\n";
  } else if (*partCmd) {
    std::cout << zel::partition_P(zel::Multisegment::parse(msegArg)).str() << "\n";
  } else if (*mCmd) {
    std::cout << zel::decomposition_number(zel::Multisegment::parse(bArg),
                                           zel::Multisegment::parse(aArg))
              << "\n";
  } else if (*branchCmd) {
    const zel::Multisegment a = zel::Multisegment::parse(aArg);
    if (format == "json")
      std::cout << zel::branch_report(a, cap) << "\n";
    else
      print_partition_vector(zel::branch(a, cap).multiplicities, format);
  } else if (*klCmd) {
    auto parsePerm = [&](const std::string& text) {
      zel::WeylElement w = zel::WeylElement::parse(text);
      if (w.n() != klN) throw std::invalid_argument("permutation \"" + text + "\" has wrong rank");
      return w;
    };
    const zel::IntPolynomial p = zel::kl_polynomial(parsePerm(xArg), parsePerm(wArg));
    if (format == "json") {
      ordered_json j;
      j["coeffs"] = ordered_json::array();
      for (int i = 0; i <= p.degree(); ++i) j["coeffs"].push_back(p.coeff(i));
      if (p.is_zero()) j["coeffs"] = ordered_json::array();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << p.str() << "\n";
    }
  } else if (*verifyCmd) {
    const bool ok = zel::verify_hecke_relations(heckeN, &std::cerr);
    std::cout << (ok ? "ok" : "FAILED") << "\n";
    return ok ? 0 : 1;
  } else if (*tableCmd) {
    const zel::CharacterTable& table = zel::CharacterTable::get(symN);
    ordered_json j;
    j["n"] = symN;
    j["classes"] = ordered_json::array();
    for (const auto& lam : table.labels()) j["classes"].push_back(lam.parts());
    j["rows"] = ordered_json::array();
    for (size_t i = 0; i < table.labels().size(); ++i) {
      ordered_json row;
      row["irrep"] = table.labels()[i].parts();
      row["values"] = ordered_json::array();
      for (size_t c = 0; c < table.labels().size(); ++c)
        row["values"].push_back(table.value(static_cast<int>(i), static_cast<int>(c)));
      j["rows"].push_back(row);
    }
    std::cout << j.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const zel::DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
