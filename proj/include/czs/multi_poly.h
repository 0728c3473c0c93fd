#ifndef CZS_MULTI_POLY_H
#define CZS_MULTI_POLY_H

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "czs/ring_scalar.h"

namespace czs {

/// Variable x^{(pair)}_{component} of a form in `arity` binary variable pairs.
struct VarId {
  int pair_index = 0;
  int component = 0;
  int flat() const { return 2 * pair_index + component; }
};

/// Sparse exponent vector: (flat variable index, exponent) sorted by index, exponents > 0.
using Monomial = std::vector<std::pair<uint16_t, uint16_t>>;

class MultiPoly {
 public:
  using Terms = std::map<Monomial, RingScalar>;

  explicit MultiPoly(int arity = 0) : arity_(arity) {}
  static MultiPoly constant(int arity, const RingScalar &c);
  static MultiPoly variable(int arity, VarId v);

  int arity() const { return arity_; }
  const Terms &terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * monomial; drops the entry if the coefficient cancels.
  void add_term(const Monomial &m, const RingScalar &c);
  RingScalar coefficient(const Monomial &m) const;
  // Maximum total degree in the two variables of one pair.
  int pair_degree(int pair) const;

  RingScalar evaluate(std::span<const RingScalar> values) const;

  MultiPoly &operator+=(const MultiPoly &o);
  MultiPoly &operator-=(const MultiPoly &o);
  MultiPoly &operator*=(const RingScalar &c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const RingScalar &c) { return a *= c; }
  friend MultiPoly operator*(const RingScalar &c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
  MultiPoly operator-() const;
  bool operator==(const MultiPoly &o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

  // Variables print as x{pair}_{component}.
  std::string to_string() const;

 private:
  int arity_;
  Terms terms_;
};

Monomial monomial_product(const Monomial &a, const Monomial &b);

MultiPoly differentiate(const MultiPoly &p, VarId v);

// Transvectant (f,g)^{orders}: Cayley operator Omega applied orders[j] times on pair j of
// f(x') g(x''), followed by identifying x' and x''.
MultiPoly transvect(const MultiPoly &f, const MultiPoly &g, std::span<const int> orders);

bool poly_is_zero(const MultiPoly &p);

}  // namespace czs

#endif
