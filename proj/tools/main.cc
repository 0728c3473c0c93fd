#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "czs/circuit.h"
#include "czs/entangle.h"
#include "czs/error.h"
#include "czs/optimizer.h"
#include "czs/relations.h"
#include "czs/sim.h"
#include "czs/word.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw czs::DomainError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

czs::Circuit load_circuit(const std::string &path) {
  try {
    return czs::parse_circuit(read_file(path));
  } catch (const czs::DomainError &e) {
    throw czs::DomainError(path + ": " + e.what());
  }
}

void field(const std::string &key, const std::string &value) { std::cout << key << ": " << value << "\n"; }

struct OptimizeArgs {
  std::string file;
  std::string word;
  int qubits = 0;
  std::string topology = "complete";
  size_t budget = czs::kDefaultSearchBudget;
  bool exact = false;
};

int run_optimize(const OptimizeArgs &a) {
  using namespace czs;
  const Topology topo = parse_topology(a.topology);
  Circuit input;
  if (!a.word.empty()) {
    if (a.qubits < 2) throw DomainError("--word needs --qubits");
    input = word_to_circuit(parse_word(a.qubits, a.word));
  } else {
    if (a.file.empty()) throw DomainError("optimize needs a circuit file or --word");
    input = load_circuit(a.file);
  }
  const NormalForm nf = normalize(input);
  field("qubits", std::to_string(input.k));
  field("topology", topology_name(topo));
  field("input gates", std::to_string(input.gates.size()));
  field("normal form", nf.to_string());

  Circuit output;
  if (topo == Topology::Complete) {
    output = synthesize_complete(nf);
    if (a.exact) {
      if (input.k > kMaxEnumerationQubits) throw DomainError("--exact needs at most 5 qubits");
      const GeneratorWord best = bfs_minimize(nf, Topology::Complete);
      if (best.size() < output.gates.size()) output = word_to_circuit(best);
    }
  } else {
    for (const auto &v : check_topology(input, Topology::Line)) throw DomainError(v.message);
    const GeneratorWord w = circuit_to_word(input);
    GeneratorWord best = heuristic_line_reduce(w, a.budget);
    if (a.exact) {
      if (input.k > kMaxEnumerationQubits) throw DomainError("--exact needs at most 5 qubits");
      const GeneratorWord shortest = bfs_minimize(nf, Topology::Line);
      if (shortest.size() < best.size()) best = shortest;
    }
    field("word", best.empty() ? "()" : best.to_string());
    output = word_to_circuit(best);
  }
  field("output gates", std::to_string(output.gates.size()));
  std::cout << serialize_circuit(output);

  const bool ok = equivalent(input, output) && check_topology(output, topo).empty();
  field("verified", ok ? "equivalent" : "FAILED");
  return ok ? kExitOk : kExitVerify;
}

int run_verify(const std::string &a, const std::string &b) {
  const czs::Circuit c1 = load_circuit(a), c2 = load_circuit(b);
  if (c1.k != c2.k) throw czs::DomainError("qubit counts differ: " + std::to_string(c1.k) + " vs " + std::to_string(c2.k));
  const bool eq = czs::equivalent(c1, c2);
  std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
  return eq ? kExitOk : kExitVerify;
}

czs::PairSet parse_pairs(int k, const std::string &text) {
  std::vector<std::pair<int, int>> pairs;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    if (tok.size() != 2 || !std::isdigit(tok[0]) || !std::isdigit(tok[1])) {
      throw czs::DomainError("bad pair '" + tok + "', expected two digits like 01");
    }
    const int i = tok[0] - '0', j = tok[1] - '0';
    if (i == j || i >= k || j >= k) throw czs::DomainError("pair '" + tok + "' is not a pair of distinct qubits below " + std::to_string(k));
    pairs.emplace_back(std::min(i, j), std::max(i, j));
  }
  return czs::PairSet(k, pairs);
}

struct ClassifyArgs {
  int qubits = 0;
  std::string pairs;
  std::string params = "random";
  uint64_t seed = 0;
  bool symbolic = false;
};

int run_classify(const ClassifyArgs &a) {
  using namespace czs;
  const int k = a.qubits;
  const PairSet e = parse_pairs(k, a.pairs);
  if (a.symbolic && k > 4) throw DomainError("--symbolic needs at most 4 qubits");
  ParamSpec p;
  if (a.params == "random") {
    std::mt19937_64 rng(a.seed);
    p = random_params(k, rng);
  } else {
    p = parse_params(k, read_file(a.params));
  }
  field("qubits", std::to_string(k));
  field("pairs", e.to_string());
  field("params", p.to_string());

  if (a.symbolic) {
    for (const auto &[name, poly] : symbolic_invariants(e)) field(name + " (symbolic)", poly.to_string());
  }

  if (k == 3) {
    const PureState s = phi_state(e, p);
    field("Delta", delta3(s).to_string());
    field("catalecticant", catalecticant3_eval(s).to_string());
    const Class3 c = classify3(s);
    field("class", class3_name(c));
    return c == Class3::Wclass ? kExitVerify : kExitOk;
  }
  if (k == 4) {
    const Phi4Classification r = classify_phi4(e, p);
    field("case", std::to_string(r.case_label));
    field("shape", r.shape);
    if (!r.annotation.empty()) field("family", r.annotation);
    field("B", r.invariants.B.to_string());
    field("L", r.invariants.L.to_string());
    field("M", r.invariants.M.to_string());
    field("N", r.invariants.N.to_string());
    field("Dxy", r.invariants.Dxy.to_string());
    for (int n = 0; n < 3; ++n) {
      const std::string name = "Q" + std::to_string(n + 1);
      field(name, r.quartic_forms[n].to_string());
      field(name + " roots", root_config_name(r.roots[n]));
    }
    for (const auto &c : r.checks) field("check " + c.name, c.holds ? "holds" : "FAILS");
    field("signature", r.signature_holds() ? "holds" : "FAILS");
    return r.signature_holds() ? kExitOk : kExitVerify;
  }
  if (k == 5) {
    const TabulatedSolution t = tabulated_solution_5q(e, p);
    field("representative", t.representative);
    field("table row", t.table_row_ok ? "verified" : "rejected");
    if (!t.discrepancy.empty()) field("discrepancy", t.discrepancy);
    if (!t.solution) {
      field("solution", "none found");
      return kExitVerify;
    }
    field("solution", t.solution->to_string());
    field("hyperdeterminant", "0");
    return kExitOk;
  }
  throw DomainError("classify supports 3, 4 or 5 qubits");
}

int run_enumerate(int k, const std::string &topology) {
  const auto table = czs::enumerate_group(k, czs::parse_topology(topology));
  field("qubits", std::to_string(k));
  field("topology", topology);
  field("order", std::to_string(table->order()));
  field("diameter", std::to_string(table->diameter()));
  return kExitOk;
}

int run_ghz(int k) {
  std::cout << czs::serialize_circuit(czs::ghz_circuit(k));
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"CZ/SWAP circuit optimizer and entanglement classifier"};
  app.require_subcommand(1);

  OptimizeArgs opt;
  auto *optimize = app.add_subcommand("optimize", "Reduce a CZ/SWAP circuit");
  optimize->add_option("file", opt.file, "Circuit file");
  optimize->add_option("--word", opt.word, "Generator word such as \"s0 z1 s0\" instead of a file");
  optimize->add_option("--qubits", opt.qubits, "Qubit count for --word");
  optimize->add_option("--topology", opt.topology, "complete or line")->check(CLI::IsMember({"complete", "line"}));
  optimize->add_option("--budget", opt.budget, "Search budget for line reduction")->check(CLI::PositiveNumber);
  optimize->add_flag("--exact", opt.exact, "Use the Cayley-graph search (k <= 5)");

  std::string first, second;
  auto *verify = app.add_subcommand("verify", "Check two circuits for equality as operators");
  verify->add_option("a", first)->required();
  verify->add_option("b", second)->required();

  ClassifyArgs cls;
  auto *classify = app.add_subcommand("classify", "Entanglement report for a graph-phase product state");
  classify->add_option("--qubits", cls.qubits)->required()->check(CLI::IsMember({3, 4, 5}));
  classify->add_option("--pairs", cls.pairs, "Comma list such as 01,12");
  classify->add_option("--params", cls.params, "random, or a parameter file");
  classify->add_option("--seed", cls.seed);
  classify->add_flag("--symbolic", cls.symbolic, "Also print invariants in the parameters (k <= 4)");

  int enum_k = 0;
  std::string enum_topology = "complete";
  auto *enumerate = app.add_subcommand("enumerate", "Group order and Cayley-graph diameter");
  enumerate->add_option("--qubits", enum_k)->required()->check(CLI::Range(2, 5));
  enumerate->add_option("--topology", enum_topology)->check(CLI::IsMember({"complete", "line"}));

  int ghz_k = 0;
  auto *ghz = app.add_subcommand("ghz", "Print a circuit preparing GHZ_k");
  ghz->add_option("--qubits", ghz_k)->required()->check(CLI::Range(2, 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (*optimize) return run_optimize(opt);
    if (*verify) return run_verify(first, second);
    if (*classify) return run_classify(cls);
    if (*enumerate) return run_enumerate(enum_k, enum_topology);
    if (*ghz) return run_ghz(ghz_k);
  } catch (const czs::DomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}
