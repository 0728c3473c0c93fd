#include "czs/sim.h"

#include <deque>
#include <map>
#include <mutex>
#include <utility>

#include "czs/error.h"

namespace czs {

namespace {

uint32_t bit(uint32_t v, int q) { return (v >> q) & 1U; }

uint32_t swap_bits(uint32_t v, int a, int b) {
  if (bit(v, a) != bit(v, b)) v ^= (1U << a) | (1U << b);
  return v;
}

void require_dense(int k) {
  if (k > kMaxDenseQubits) {
    throw DomainError("dense simulation limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  }
}

bool is_czs_only(const Circuit &c) {
  for (const auto &g : c.gates) {
    if (!g.is_two_qubit()) return false;
  }
  return true;
}

}  // namespace

SignedPerm SignedPerm::identity(int k) {
  if (k < 1 || k > 24) throw DomainError("signed permutation size unsupported");
  SignedPerm p;
  p.k_ = k;
  p.dest_.resize(size_t{1} << k);
  p.sign_.assign(size_t{1} << k, 1);
  for (uint32_t a = 0; a < p.dest_.size(); ++a) p.dest_[a] = a;
  return p;
}

SignedPerm SignedPerm::of_gate(int k, const Gate &g) {
  SignedPerm p = identity(k);
  for (uint32_t a = 0; a < p.dest_.size(); ++a) {
    if (g.kind == GateKind::CZ) {
      if (bit(a, g.q0) && bit(a, g.q1)) p.sign_[a] = -1;
    } else if (g.kind == GateKind::SWAP) {
      p.dest_[a] = swap_bits(a, g.q0, g.q1);
    } else {
      throw DomainError("gate '" + g.to_string() + "' has no signed permutation form");
    }
  }
  return p;
}

bool SignedPerm::is_identity() const {
  for (uint32_t a = 0; a < dest_.size(); ++a) {
    if (dest_[a] != a || sign_[a] != 1) return false;
  }
  return true;
}

RingMatrix SignedPerm::to_matrix() const {
  RingMatrix m(dim());
  for (size_t a = 0; a < dim(); ++a) m.at(dest_[a], a) = RingScalar(sign_[a]);
  return m;
}

SignedPerm operator*(const SignedPerm &a, const SignedPerm &b) {
  if (a.k_ != b.k_) throw DomainError("signed permutation size mismatch");
  SignedPerm r = b;
  for (size_t x = 0; x < b.dest_.size(); ++x) {
    uint32_t mid = b.dest_[x];
    r.dest_[x] = a.dest_[mid];
    r.sign_[x] = static_cast<int8_t>(a.sign_[mid] * b.sign_[x]);
  }
  return r;
}

SignedPerm signed_perm_of(const NormalForm &nf) {
  const int k = nf.k();
  SignedPerm p = SignedPerm::identity(k);
  const auto pairs = nf.phase.pairs();
  for (uint32_t a = 0; a < p.dest_.size(); ++a) {
    uint32_t b = 0;
    for (int i = 0; i < k; ++i) b |= bit(a, i) << nf.perm(i);
    int parity = 0;
    for (auto [i, j] : pairs) parity ^= static_cast<int>(bit(b, i) & bit(b, j));
    p.dest_[a] = b;
    p.sign_[a] = parity ? -1 : 1;
  }
  return p;
}

RingMatrix RingMatrix::identity(size_t dim) {
  RingMatrix m(dim);
  for (size_t i = 0; i < dim; ++i) m.at(i, i) = RingScalar(1);
  return m;
}

RingMatrix RingMatrix::adjoint() const {
  RingMatrix r(dim_);
  for (size_t i = 0; i < dim_; ++i) {
    for (size_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j).conj();
  }
  return r;
}

bool RingMatrix::is_identity() const { return *this == identity(dim_); }

RingMatrix operator*(const RingMatrix &a, const RingMatrix &b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix size mismatch");
  RingMatrix r(a.dim_);
  for (size_t i = 0; i < a.dim_; ++i) {
    for (size_t l = 0; l < a.dim_; ++l) {
      const RingScalar &x = a.at(i, l);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < a.dim_; ++j) {
        if (!b.at(l, j).is_zero()) r.at(i, j) += x * b.at(l, j);
      }
    }
  }
  return r;
}

void RingMatrix::apply_gate(int k, const Gate &g) {
  if (dim_ != (size_t{1} << k)) throw DomainError("matrix size does not match qubit count");
  const RingScalar h = RingScalar::inv_sqrt2();
  for (uint32_t r = 0; r < dim_; ++r) {
    switch (g.kind) {
      case GateKind::CZ:
        if (bit(r, g.q0) && bit(r, g.q1)) {
          for (size_t c = 0; c < dim_; ++c) at(r, c) = -at(r, c);
        }
        break;
      case GateKind::SWAP: {
        uint32_t s = swap_bits(r, g.q0, g.q1);
        if (r < s) {
          for (size_t c = 0; c < dim_; ++c) std::swap(at(r, c), at(s, c));
        }
        break;
      }
      case GateKind::X:
        if (!bit(r, g.q0)) {
          uint32_t s = r | (1U << g.q0);
          for (size_t c = 0; c < dim_; ++c) std::swap(at(r, c), at(s, c));
        }
        break;
      case GateKind::H:
        if (!bit(r, g.q0)) {
          uint32_t s = r | (1U << g.q0);
          for (size_t c = 0; c < dim_; ++c) {
            RingScalar lo = at(r, c), hi = at(s, c);
            at(r, c) = (lo + hi) * h;
            at(s, c) = (lo - hi) * h;
          }
        }
        break;
    }
  }
}

SignedPerm circuit_signed_perm(const Circuit &c) {
  SignedPerm acc = SignedPerm::identity(c.k);
  for (const auto &g : c.gates) acc = SignedPerm::of_gate(c.k, g) * acc;
  return acc;
}

RingMatrix circuit_unitary(const Circuit &c) {
  require_dense(c.k);
  RingMatrix u = RingMatrix::identity(size_t{1} << c.k);
  for (const auto &g : c.gates) u.apply_gate(c.k, g);
  return u;
}

std::vector<RingScalar> apply_circuit(const Circuit &c, std::vector<RingScalar> state) {
  if (state.size() != (size_t{1} << c.k)) throw DomainError("state length does not match qubit count");
  const RingScalar h = RingScalar::inv_sqrt2();
  for (const auto &g : c.gates) {
    for (uint32_t a = 0; a < state.size(); ++a) {
      switch (g.kind) {
        case GateKind::CZ:
          if (bit(a, g.q0) && bit(a, g.q1)) state[a] = -state[a];
          break;
        case GateKind::SWAP:
          if (uint32_t s = swap_bits(a, g.q0, g.q1); a < s) std::swap(state[a], state[s]);
          break;
        case GateKind::X:
          if (!bit(a, g.q0)) std::swap(state[a], state[a | (1U << g.q0)]);
          break;
        case GateKind::H:
          if (!bit(a, g.q0)) {
            uint32_t s = a | (1U << g.q0);
            RingScalar lo = state[a], hi = state[s];
            state[a] = (lo + hi) * h;
            state[s] = (lo - hi) * h;
          }
          break;
      }
    }
  }
  return state;
}

bool equivalent(const Circuit &c1, const Circuit &c2) {
  if (c1.k != c2.k) throw DomainError("equivalent: circuits have different qubit counts");
  if (is_czs_only(c1) && is_czs_only(c2)) return circuit_signed_perm(c1) == circuit_signed_perm(c2);
  return circuit_unitary(c1) == circuit_unitary(c2);
}

GeneratorWord GroupTable::word_of(const NormalForm &nf) const {
  auto it = index.find(nf);
  if (it == index.end()) throw DomainError("element not in the enumerated group");
  GeneratorWord w{k, {}};
  for (int at = it->second; parent[at] >= 0; at = parent[at]) w.letters.push_back(generators[generator[at]]);
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

namespace {

std::shared_ptr<const GroupTable> build_table(int k, Topology t) {
  auto table = std::make_shared<GroupTable>();
  table->k = k;
  table->topology = t;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (t == Topology::Line && j != i + 1) continue;
      table->generators.push_back({Letter::Kind::S, i, j});
      table->generators.push_back({Letter::Kind::Z, i, j});
    }
  }
  std::sort(table->generators.begin(), table->generators.end());
  std::vector<NormalForm> gens;
  for (const auto &l : table->generators) gens.push_back(l.element(k));

  auto add = [&](NormalForm nf, int dist, int par, int gen) {
    auto [it, inserted] = table->index.try_emplace(nf, static_cast<int>(table->elements.size()));
    if (!inserted) return;
    table->elements.push_back(std::move(nf));
    table->distance.push_back(dist);
    table->parent.push_back(par);
    table->generator.push_back(gen);
  };
  add(NormalForm::identity(k), 0, -1, -1);
  for (size_t at = 0; at < table->elements.size(); ++at) {
    for (size_t g = 0; g < gens.size(); ++g) {
      add(nf_product(table->elements[at], gens[g]), table->distance[at] + 1, static_cast<int>(at),
          static_cast<int>(g));
    }
  }
  return table;
}

}  // namespace

std::shared_ptr<const GroupTable> enumerate_group(int k, Topology t) {
  if (k < 2 || k > kMaxEnumerationQubits) {
    throw DomainError("group enumeration is limited to 2.." + std::to_string(kMaxEnumerationQubits) +
                      " qubits: the order k! 2^(k(k-1)/2) exceeds 10^8 already at k=6");
  }
  static std::mutex mu;
  static std::map<std::pair<int, Topology>, std::shared_ptr<const GroupTable>> cache;
  std::lock_guard lock(mu);
  auto &slot = cache[{k, t}];
  if (!slot) slot = build_table(k, t);
  return slot;
}

std::vector<RelatorCheck> verify_relators(int k, const std::vector<GeneratorWord> &relators) {
  std::vector<RelatorCheck> out;
  for (const auto &r : relators) {
    if (r.k != k) throw DomainError("relator qubit count mismatch");
    SignedPerm acc = SignedPerm::identity(k);
    for (const auto &l : r.letters) acc = acc * SignedPerm::of_gate(k, l.gate());
    out.push_back({r, acc.is_identity()});
  }
  return out;
}

bool verify_presentation(int k, PresentationKind which) {
  for (const auto &check : verify_relators(k, presentation_relators(k, which))) {
    if (!check.identity) return false;
  }
  return true;
}

}  // namespace czs
