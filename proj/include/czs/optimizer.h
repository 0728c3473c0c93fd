#ifndef CZS_OPTIMIZER_H
#define CZS_OPTIMIZER_H

#include <cstddef>

#include "czs/circuit.h"
#include "czs/group.h"
#include "czs/relations.h"
#include "czs/word.h"

namespace czs {

inline constexpr size_t kDefaultSearchBudget = 10000;

// Folds the gates into Z_E S_sigma; throws DomainError on H or X.
NormalForm normalize(const Circuit &c);

// CZ gates first, then one SWAP per non-fixed point minus one per cycle.
Circuit synthesize_complete(const NormalForm &nf);

// Reduced word over s_i read off the inversion diagram of sigma.
GeneratorWord rothe_reduced_word(const Permutation &sigma);

// Cancels adjacent equal letters until none remain.
GeneratorWord free_reduce(const GeneratorWord &w);

// Shortest word for the same element of the Coxeter group on the line letters (relations
// with exponents from coxeter_exponent). Only deletes letters.
GeneratorWord coxeter_reduce(const GeneratorWord &w);

// Alternates coxeter_reduce with leftmost-longest Dehn replacements until neither applies.
GeneratorWord dehn_reduce(const GeneratorWord &w, const RelationSet &r);

// Best-first search over Dehn steps and length-preserving relator rewrites, ordered by
// (length, letters); returns the best word seen within `budget` expansions.
GeneratorWord heuristic_line_reduce(const GeneratorWord &w, size_t budget = kDefaultSearchBudget);

// Geodesic in the Cayley graph of the topology's generators; k <= 5.
GeneratorWord bfs_minimize(const NormalForm &nf, Topology t);

}  // namespace czs

#endif
