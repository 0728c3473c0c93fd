#ifndef CZS_CIRCUIT_H
#define CZS_CIRCUIT_H

#include <string>
#include <string_view>
#include <vector>

namespace czs {

enum class GateKind { CZ, SWAP, H, X };

struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;  // second qubit of CZ/SWAP, -1 otherwise

  static Gate cz(int i, int j);
  static Gate swap(int i, int j);
  static Gate h(int i) { return {GateKind::H, i, -1}; }
  static Gate x(int i) { return {GateKind::X, i, -1}; }

  bool is_two_qubit() const { return kind == GateKind::CZ || kind == GateKind::SWAP; }
  bool operator==(const Gate &o) const = default;
  // Canonical text form, e.g. "cz 0 1".
  std::string to_string() const;
};

/// Gates in application order: gates[0] acts on the state first.
struct Circuit {
  int k = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  Circuit(int qubits, std::vector<Gate> gs = {});
  bool operator==(const Circuit &o) const = default;
  size_t two_qubit_count() const;
};

enum class Topology { Complete, Line };

struct TopologyViolation {
  size_t gate_index;
  Gate gate;
  std::string message;
};

// Grammar: "qubits <k>" header, then "cz i j", "swap i j", "h i", "x i"; '#' comments.
// Throws DomainError naming the offending line.
Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit &c);
std::vector<TopologyViolation> check_topology(const Circuit &c, Topology t);

Topology parse_topology(std::string_view name);
std::string topology_name(Topology t);

}  // namespace czs

#endif
