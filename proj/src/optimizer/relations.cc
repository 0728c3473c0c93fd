#include "czs/relations.h"

#include <algorithm>
#include <cstdlib>

#include "czs/error.h"

namespace czs {

namespace {

GeneratorWord power(int k, const std::vector<Letter> &base, int n) {
  GeneratorWord w{k, {}};
  for (int r = 0; r < n; ++r) w.letters.insert(w.letters.end(), base.begin(), base.end());
  return w;
}

std::vector<GeneratorWord> adjacent_relators(int k) {
  const int n = k - 1;
  std::vector<GeneratorWord> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(power(k, {Letter::z(i)}, 2));
    out.push_back(power(k, {Letter::s(i)}, 2));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) out.push_back(power(k, {Letter::s(i), Letter::s(j)}, 2));
  }
  for (int i = 0; i + 1 < n; ++i) out.push_back(power(k, {Letter::s(i), Letter::s(i + 1)}, 3));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.push_back(power(k, {Letter::z(i), Letter::z(j)}, 2));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int exp = std::abs(i - j) == 1 ? 4 : 2;
      out.push_back(power(k, {Letter::z(i), Letter::s(j)}, exp));
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    out.push_back({k, {Letter::s(i), Letter::s(i + 1), Letter::z(i), Letter::s(i + 1), Letter::s(i), Letter::z(i + 1)}});
  }
  return out;
}

std::vector<GeneratorWord> minimal_relators(int k) {
  // g0 = z0, g_{i+1} = s_i
  auto g = [](int i) { return i == 0 ? Letter::z(0) : Letter::s(i - 1); };
  std::vector<GeneratorWord> out;
  for (int i = 0; i < k; ++i) out.push_back(power(k, {g(i)}, 2));
  for (int i = 1; i < k; ++i) {
    for (int j = i + 2; j < k; ++j) out.push_back(power(k, {g(i), g(j)}, 2));
  }
  for (int i = 1; i + 1 < k; ++i) out.push_back(power(k, {g(i), g(i + 1)}, 3));
  for (int i = 1; i < k; ++i) {
    if (i != 2) out.push_back(power(k, {g(0), g(i)}, 2));
  }
  if (k >= 3) out.push_back(power(k, {g(0), g(2)}, 4));
  if (k >= 4) out.push_back(power(k, {g(0), g(2), g(3), g(1), g(2)}, 4));
  return out;
}

}  // namespace

std::vector<GeneratorWord> presentation_relators(int k, PresentationKind which) {
  if (k < 2 || k > kMaxQubits) throw DomainError("presentation needs between 2 and 32 qubits");
  return which == PresentationKind::Adjacent ? adjacent_relators(k) : minimal_relators(k);
}

int coxeter_exponent(const Letter &a, const Letter &b) {
  if (a == b) return 1;
  const int i = a.lo, j = b.lo;
  if (a.kind == Letter::Kind::S && b.kind == Letter::Kind::S) return std::abs(i - j) == 1 ? 3 : 2;
  if (a.kind == Letter::Kind::Z && b.kind == Letter::Kind::Z) return 2;
  return std::abs(i - j) == 1 ? 4 : 2;
}

RelationSet::RelationSet(int k, const std::vector<GeneratorWord> &relators) : k_(k) {
  for (const auto &r : relators) {
    if (r.k != k) throw DomainError("relator qubit count mismatch");
    if (!r.is_line()) throw DomainError("relator '" + r.to_string() + "' uses non-adjacent letters");
    if (!r.evaluate().is_identity()) throw DomainError("relator '" + r.to_string() + "' is not the identity");
    for (const GeneratorWord &base : {r, r.inverse()}) {
      for (size_t shift = 0; shift < base.size(); ++shift) {
        GeneratorWord c{k, {}};
        c.letters.insert(c.letters.end(), base.letters.begin() + shift, base.letters.end());
        c.letters.insert(c.letters.end(), base.letters.begin(), base.letters.begin() + shift);
        relators_.push_back(std::move(c));
      }
    }
  }
  std::sort(relators_.begin(), relators_.end());
  relators_.erase(std::unique(relators_.begin(), relators_.end()), relators_.end());
}

RelationSet RelationSet::line(int k) { return RelationSet(k, presentation_relators(k, PresentationKind::Adjacent)); }

}  // namespace czs
