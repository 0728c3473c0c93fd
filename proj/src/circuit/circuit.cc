#include "czs/circuit.h"

#include <cstdlib>
#include <sstream>
#include <utility>

#include "czs/error.h"
#include "czs/group.h"

namespace czs {

Gate Gate::cz(int i, int j) {
  if (i > j) std::swap(i, j);
  return {GateKind::CZ, i, j};
}

Gate Gate::swap(int i, int j) {
  if (i > j) std::swap(i, j);
  return {GateKind::SWAP, i, j};
}

std::string Gate::to_string() const {
  switch (kind) {
    case GateKind::CZ:
      return "cz " + std::to_string(q0) + " " + std::to_string(q1);
    case GateKind::SWAP:
      return "swap " + std::to_string(q0) + " " + std::to_string(q1);
    case GateKind::H:
      return "h " + std::to_string(q0);
    case GateKind::X:
      return "x " + std::to_string(q0);
  }
  return "?";
}

namespace {

void validate_gate(const Gate &g, int k, const std::string &where) {
  auto bad = [&](const std::string &msg) { throw DomainError(where + msg); };
  if (g.q0 < 0 || g.q0 >= k) bad("qubit index " + std::to_string(g.q0) + " out of range for " + std::to_string(k) + " qubits");
  if (g.is_two_qubit()) {
    if (g.q1 < 0 || g.q1 >= k) bad("qubit index " + std::to_string(g.q1) + " out of range for " + std::to_string(k) + " qubits");
    if (g.q0 == g.q1) bad("two-qubit gate acts twice on qubit " + std::to_string(g.q0));
  }
}

bool parse_index(const std::string &tok, int &out) {
  if (tok.empty() || tok.size() > 9) return false;
  for (char ch : tok) {
    if (ch < '0' || ch > '9') return false;
  }
  out = std::atoi(tok.c_str());
  return true;
}

}  // namespace

Circuit::Circuit(int qubits, std::vector<Gate> gs) : k(qubits), gates(std::move(gs)) {
  if (k < 1 || k > kMaxQubits) throw DomainError("qubit count " + std::to_string(k) + " unsupported");
  for (size_t n = 0; n < gates.size(); ++n) {
    if (gates[n].is_two_qubit() && gates[n].q0 > gates[n].q1) std::swap(gates[n].q0, gates[n].q1);
    validate_gate(gates[n], k, "gate " + std::to_string(n) + ": ");
  }
}

size_t Circuit::two_qubit_count() const {
  size_t n = 0;
  for (const auto &g : gates) n += g.is_two_qubit();
  return n;
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int k = -1;
  std::vector<Gate> gates;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    auto fail = [&](const std::string &msg) { throw DomainError(where + msg); };
    if (k < 0) {
      int v = 0;
      if (toks[0] != "qubits" || toks.size() != 2 || !parse_index(toks[1], v)) {
        fail("expected header 'qubits <k>'");
      }
      if (v < 1 || v > kMaxQubits) fail("qubit count " + toks[1] + " unsupported");
      k = v;
      continue;
    }
    const std::string &op = toks[0];
    int a = 0, b = 0;
    if (op == "cz" || op == "swap") {
      if (toks.size() != 3 || !parse_index(toks[1], a) || !parse_index(toks[2], b)) {
        fail("expected '" + op + " <i> <j>'");
      }
      Gate g = op == "cz" ? Gate::cz(a, b) : Gate::swap(a, b);
      validate_gate(g, k, where);
      gates.push_back(g);
    } else if (op == "h" || op == "x") {
      if (toks.size() != 2 || !parse_index(toks[1], a)) fail("expected '" + op + " <i>'");
      Gate g = op == "h" ? Gate::h(a) : Gate::x(a);
      validate_gate(g, k, where);
      gates.push_back(g);
    } else {
      fail("unknown gate '" + op + "'");
    }
  }
  if (k < 0) throw DomainError("line " + std::to_string(lineno) + ": missing 'qubits <k>' header");
  return Circuit(k, std::move(gates));
}

std::string serialize_circuit(const Circuit &c) {
  std::string out = "qubits " + std::to_string(c.k) + "\n";
  for (const auto &g : c.gates) out += g.to_string() + "\n";
  return out;
}

std::vector<TopologyViolation> check_topology(const Circuit &c, Topology t) {
  std::vector<TopologyViolation> out;
  if (t == Topology::Complete) return out;
  for (size_t n = 0; n < c.gates.size(); ++n) {
    const Gate &g = c.gates[n];
    if (g.is_two_qubit() && g.q1 - g.q0 != 1) {
      out.push_back({n, g, "gate " + std::to_string(n) + " (" + g.to_string() + ") acts on non-adjacent qubits"});
    }
  }
  return out;
}

Topology parse_topology(std::string_view name) {
  if (name == "complete") return Topology::Complete;
  if (name == "line") return Topology::Line;
  throw DomainError("unknown topology '" + std::string(name) + "'");
}

std::string topology_name(Topology t) { return t == Topology::Complete ? "complete" : "line"; }

}  // namespace czs
