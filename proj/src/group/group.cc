#include "czs/group.h"

#include <algorithm>
#include <sstream>

#include "czs/error.h"

namespace czs {

namespace {

void require_k(int k) {
  if (k < 1 || k > kMaxQubits) {
    throw DomainError("qubit count " + std::to_string(k) + " outside 1.." + std::to_string(kMaxQubits));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  require_k(k());
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= k() || seen[v]) throw DomainError("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int k) {
  require_k(k);
  std::vector<int> im(k);
  for (int i = 0; i < k; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int k, int i, int j) {
  Permutation p = identity(k);
  if (i < 0 || j < 0 || i >= k || j >= k || i == j) throw DomainError("invalid transposition");
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

Permutation Permutation::from_cycles(int k, const std::vector<std::vector<int>> &cycles) {
  Permutation p = identity(k);
  std::vector<bool> used(k, false);
  for (const auto &c : cycles) {
    for (size_t n = 0; n < c.size(); ++n) {
      int a = c[n];
      if (a < 0 || a >= k || used[a]) throw DomainError("cycles are not disjoint or out of range");
      used[a] = true;
      p.images_[a] = c[(n + 1) % c.size()];
    }
  }
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < k(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < k(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

int Permutation::inversion_count() const {
  int n = 0;
  for (int i = 0; i < k(); ++i) {
    for (int j = i + 1; j < k(); ++j) n += images_[i] > images_[j];
  }
  return n;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(k(), false);
  for (int s = 0; s < k(); ++s) {
    if (seen[s] || images_[s] == s) continue;
    std::vector<int> c;
    for (int a = s; !seen[a]; a = images_[a]) {
      seen[a] = true;
      c.push_back(a);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto &c : cs) {
    out << "(";
    for (size_t n = 0; n < c.size(); ++n) out << (n ? "," : "") << c[n];
    out << ")";
  }
  return out.str();
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.k() != b.k()) throw DomainError("permutation size mismatch");
  std::vector<int> im(a.k());
  for (int i = 0; i < a.k(); ++i) im[i] = a.images_[b.images_[i]];
  Permutation r;
  r.images_ = std::move(im);
  return r;
}

int PairSet::slot(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

PairSet::PairSet(int k) : k_(k) { require_k(k); }

PairSet::PairSet(int k, const std::vector<std::pair<int, int>> &pairs) : PairSet(k) {
  for (auto [i, j] : pairs) {
    if (contains(i, j)) throw DomainError("duplicate pair in pair set");
    toggle(i, j);
  }
}

PairSet PairSet::complete(int k) {
  PairSet e(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) e.toggle(i, j);
  }
  return e;
}

bool PairSet::contains(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= k_ || j >= k_) return false;
  return bits_.test(slot(i, j));
}

void PairSet::toggle(int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= k_ || j >= k_) {
    throw DomainError("invalid pair {" + std::to_string(i) + "," + std::to_string(j) + "} for k=" +
                      std::to_string(k_));
  }
  bits_.flip(slot(i, j));
}

std::vector<std::pair<int, int>> PairSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k_; ++i) {
    for (int j = i + 1; j < k_; ++j) {
      if (bits_.test(slot(i, j))) out.emplace_back(i, j);
    }
  }
  return out;
}

PairSet &PairSet::operator^=(const PairSet &o) {
  if (o.k_ != k_) throw DomainError("pair set size mismatch");
  bits_ ^= o.bits_;
  return *this;
}

std::string PairSet::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto [i, j] : pairs()) {
    out << (first ? "" : ",") << "{" << i << "," << j << "}";
    first = false;
  }
  out << "}";
  return out.str();
}

std::string NormalForm::to_string() const { return "(" + phase.to_string() + ", " + perm.to_string() + ")"; }

size_t NormalFormHash::operator()(const NormalForm &nf) const {
  size_t h = nf.phase.hash();
  for (int v : nf.perm.images()) h = h * 31 + static_cast<size_t>(v);
  return h;
}

PairSet conjugate_pairs(const Permutation &sigma, const PairSet &e) {
  if (sigma.k() != e.k()) throw DomainError("conjugate_pairs: k mismatch");
  PairSet r(e.k());
  for (auto [i, j] : e.pairs()) r.toggle(sigma(i), sigma(j));
  return r;
}

NormalForm nf_product(const NormalForm &a, const NormalForm &b) {
  if (a.k() != b.k()) throw DomainError("nf_product: k mismatch");
  return {a.phase ^ conjugate_pairs(a.perm, b.phase), a.perm * b.perm};
}

NormalForm nf_inverse(const NormalForm &a) {
  Permutation inv = a.perm.inverse();
  return {conjugate_pairs(inv, a.phase), inv};
}

}  // namespace czs
