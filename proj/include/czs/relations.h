#ifndef CZS_RELATIONS_H
#define CZS_RELATIONS_H

#include <vector>

#include "czs/word.h"

namespace czs {

enum class PresentationKind {
  // Generators z_i, s_i for all adjacent pairs; seven relation families.
  Adjacent,
  // Generators g0 = z0, g_{i+1} = s_i.
  Minimal,
};

std::vector<GeneratorWord> presentation_relators(int k, PresentationKind which);

// Coxeter exponent m(a,b) of the Coxeter group on line letters (1 when a == b).
int coxeter_exponent(const Letter &a, const Letter &b);

/// Relators over line letters, closed under cyclic shift and inversion, sorted and unique.
class RelationSet {
 public:
  // Throws DomainError if some relator does not evaluate to the identity.
  RelationSet(int k, const std::vector<GeneratorWord> &relators);
  static RelationSet line(int k);

  int k() const { return k_; }
  const std::vector<GeneratorWord> &relators() const { return relators_; }

 private:
  int k_;
  std::vector<GeneratorWord> relators_;
};

}  // namespace czs

#endif
