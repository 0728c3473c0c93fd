#ifndef CZS_WORD_H
#define CZS_WORD_H

#include <string>
#include <string_view>
#include <vector>

#include "czs/circuit.h"
#include "czs/group.h"

namespace czs {

/// Generator letter: s (SWAP) or z (c-Z) on qubits lo < hi. Line letters have hi = lo + 1
/// and print as "s3"; other pairs print as "s0-2".
struct Letter {
  enum class Kind { S, Z };
  Kind kind = Kind::S;
  int lo = 0;
  int hi = 1;

  static Letter s(int i) { return {Kind::S, i, i + 1}; }
  static Letter z(int i) { return {Kind::Z, i, i + 1}; }
  bool adjacent() const { return hi == lo + 1; }
  Gate gate() const { return kind == Kind::S ? Gate::swap(lo, hi) : Gate::cz(lo, hi); }
  NormalForm element(int k) const;
  std::string to_string() const;
  auto operator<=>(const Letter &o) const = default;
};

/// Word read as an operator product: the leftmost letter acts last on the state.
struct GeneratorWord {
  int k = 0;
  std::vector<Letter> letters;

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool is_line() const;
  // All generators are involutions, so the inverse is the reversal.
  GeneratorWord inverse() const;
  NormalForm evaluate() const;
  std::string to_string() const;
  auto operator<=>(const GeneratorWord &o) const = default;
};

// Whitespace separated tokens, e.g. "s0 s1 z0" or "z0-2".
GeneratorWord parse_word(int k, std::string_view text);

// Conversions at the operator/time-order boundary.
Circuit word_to_circuit(const GeneratorWord &w);
GeneratorWord circuit_to_word(const Circuit &c);

}  // namespace czs

#endif
