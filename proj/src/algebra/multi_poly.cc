#include "czs/multi_poly.h"

#include <algorithm>
#include <sstream>

#include "czs/error.h"

namespace czs {

MultiPoly MultiPoly::constant(int arity, const RingScalar &c) {
  MultiPoly p(arity);
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::variable(int arity, VarId v) {
  if (v.pair_index < 0 || v.pair_index >= arity || v.component < 0 || v.component > 1) {
    throw DomainError("variable outside the polynomial arity");
  }
  MultiPoly p(arity);
  p.add_term({{static_cast<uint16_t>(v.flat()), 1}}, RingScalar(1));
  return p;
}

void MultiPoly::add_term(const Monomial &m, const RingScalar &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RingScalar MultiPoly::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RingScalar() : it->second;
}

int MultiPoly::pair_degree(int pair) const {
  int best = 0;
  for (const auto &[m, c] : terms_) {
    int d = 0;
    for (auto [v, e] : m) {
      if (v / 2 == pair) d += e;
    }
    best = std::max(best, d);
  }
  return best;
}

RingScalar MultiPoly::evaluate(std::span<const RingScalar> values) const {
  if (values.size() != static_cast<size_t>(2 * arity_)) {
    throw DomainError("evaluate: expected " + std::to_string(2 * arity_) + " values");
  }
  RingScalar total;
  for (const auto &[m, c] : terms_) {
    RingScalar t = c;
    for (auto [v, e] : m) {
      for (int i = 0; i < e; ++i) t *= values[v];
    }
    total += t;
  }
  return total;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
  if (o.arity_ != arity_) throw DomainError("arity mismatch in polynomial sum");
  for (const auto &[m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
  if (o.arity_ != arity_) throw DomainError("arity mismatch in polynomial difference");
  for (const auto &[m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly &MultiPoly::operator*=(const RingScalar &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto &[m, v] : r.terms_) v = -v;
  return r;
}

Monomial monomial_product(const Monomial &a, const Monomial &b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
  if (a.arity_ != b.arity_) throw DomainError("arity mismatch in polynomial product");
  MultiPoly r(a.arity_);
  for (const auto &[ma, ca] : a.terms_) {
    for (const auto &[mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    for (auto [v, e] : m) {
      out << "*x" << v / 2 << "_" << v % 2;
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

MultiPoly differentiate(const MultiPoly &p, VarId v) {
  if (v.pair_index < 0 || v.pair_index >= p.arity() || v.component < 0 || v.component > 1) {
    throw DomainError("differentiate: variable outside the polynomial arity");
  }
  const auto flat = static_cast<uint16_t>(v.flat());
  MultiPoly r(p.arity());
  for (const auto &[m, c] : p.terms()) {
    auto it = std::find_if(m.begin(), m.end(), [&](const auto &t) { return t.first == flat; });
    if (it == m.end()) continue;
    Monomial dm = m;
    auto &slot = dm[it - m.begin()];
    int e = slot.second;
    if (e == 1) {
      dm.erase(dm.begin() + (it - m.begin()));
    } else {
      slot.second = static_cast<uint16_t>(e - 1);
    }
    r.add_term(dm, c * RingScalar(e));
  }
  return r;
}

namespace {

MultiPoly shift_pairs(const MultiPoly &f, int new_arity, int offset) {
  MultiPoly r(new_arity);
  for (const auto &[m, c] : f.terms()) {
    Monomial s = m;
    for (auto &t : s) t.first = static_cast<uint16_t>(t.first + 2 * offset);
    r.add_term(s, c);
  }
  return r;
}

}  // namespace

MultiPoly transvect(const MultiPoly &f, const MultiPoly &g, std::span<const int> orders) {
  const int p = f.arity();
  if (g.arity() != p) throw DomainError("transvect: arity mismatch between the two forms");
  if (orders.size() != static_cast<size_t>(p)) {
    throw DomainError("transvect: expected " + std::to_string(p) + " orders");
  }
  // Pairs 0..p-1 hold the primed copy, p..2p-1 the double-primed copy.
  MultiPoly prod = shift_pairs(f, 2 * p, 0) * shift_pairs(g, 2 * p, p);
  for (int j = 0; j < p; ++j) {
    if (orders[j] < 0) throw DomainError("transvect: negative order");
    for (int n = 0; n < orders[j]; ++n) {
      MultiPoly a = differentiate(differentiate(prod, {j, 0}), {p + j, 1});
      MultiPoly b = differentiate(differentiate(prod, {p + j, 0}), {j, 1});
      prod = a - b;
    }
  }
  MultiPoly r(p);
  for (const auto &[m, c] : prod.terms()) {
    Monomial folded;
    for (auto [v, e] : m) {
      auto base = static_cast<uint16_t>(v >= 2 * p ? v - 2 * p : v);
      folded = monomial_product(folded, {{base, e}});
    }
    r.add_term(folded, c);
  }
  return r;
}

bool poly_is_zero(const MultiPoly &p) { return p.is_zero(); }

}  // namespace czs
