#ifndef CZS_SIM_H
#define CZS_SIM_H

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "czs/circuit.h"
#include "czs/group.h"
#include "czs/relations.h"
#include "czs/ring_scalar.h"
#include "czs/word.h"

namespace czs {

class RingMatrix;

/// Matrix with column a holding sign[a] in row dest[a].
class SignedPerm {
 public:
  static SignedPerm identity(int k);
  // CZ or SWAP gate; throws for H/X.
  static SignedPerm of_gate(int k, const Gate &g);

  int k() const { return k_; }
  size_t dim() const { return dest_.size(); }
  const std::vector<uint32_t> &dest() const { return dest_; }
  const std::vector<int8_t> &sign() const { return sign_; }
  bool is_identity() const;
  RingMatrix to_matrix() const;

  // (a*b) applies b first.
  friend SignedPerm operator*(const SignedPerm &a, const SignedPerm &b);
  bool operator==(const SignedPerm &o) const = default;

 private:
  friend SignedPerm signed_perm_of(const NormalForm &nf);
  int k_ = 0;
  std::vector<uint32_t> dest_;
  std::vector<int8_t> sign_;
};

/// Dense square matrix over Q(i)[sqrt2], row-major.
class RingMatrix {
 public:
  RingMatrix() = default;
  explicit RingMatrix(size_t dim) : dim_(dim), entries_(dim * dim) {}
  static RingMatrix identity(size_t dim);

  size_t dim() const { return dim_; }
  const RingScalar &at(size_t r, size_t c) const { return entries_[r * dim_ + c]; }
  RingScalar &at(size_t r, size_t c) { return entries_[r * dim_ + c]; }

  RingMatrix adjoint() const;
  bool is_identity() const;
  // Left-multiplies by the matrix of g acting on a register of k qubits.
  void apply_gate(int k, const Gate &g);

  friend RingMatrix operator*(const RingMatrix &a, const RingMatrix &b);
  bool operator==(const RingMatrix &o) const = default;

 private:
  size_t dim_ = 0;
  std::vector<RingScalar> entries_;
};

inline constexpr int kMaxDenseQubits = 10;
inline constexpr int kMaxEnumerationQubits = 5;

SignedPerm signed_perm_of(const NormalForm &nf);
// Product of per-gate signed permutations, CZ/SWAP circuits only.
SignedPerm circuit_signed_perm(const Circuit &c);
RingMatrix circuit_unitary(const Circuit &c);
// Applies the circuit to an exact state vector of length 2^k.
std::vector<RingScalar> apply_circuit(const Circuit &c, std::vector<RingScalar> state);
bool equivalent(const Circuit &c1, const Circuit &c2);

/// BFS over normal forms from the identity, right-multiplying by generators.
struct GroupTable {
  int k = 0;
  Topology topology = Topology::Complete;
  std::vector<Letter> generators;
  std::vector<NormalForm> elements;  // in BFS order
  std::vector<int> distance;
  std::vector<int> parent;     // index into elements, -1 for the identity
  std::vector<int> generator;  // generator used to reach the element from its parent
  std::unordered_map<NormalForm, int, NormalFormHash> index;

  size_t order() const { return elements.size(); }
  int diameter() const { return distance.empty() ? 0 : distance.back(); }
  // Shortest word for an element; throws if absent.
  GeneratorWord word_of(const NormalForm &nf) const;
};

// Cached per (k, topology); k <= 5.
std::shared_ptr<const GroupTable> enumerate_group(int k, Topology t);

struct RelatorCheck {
  GeneratorWord relator;
  bool identity;
};

// Evaluates each relator through signed permutations of its gates.
std::vector<RelatorCheck> verify_relators(int k, const std::vector<GeneratorWord> &relators);
bool verify_presentation(int k, PresentationKind which);

}  // namespace czs

#endif
