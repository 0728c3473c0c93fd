#include "czs/optimizer.h"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

#include "czs/error.h"
#include "czs/ring_scalar.h"
#include "czs/sim.h"

namespace czs {

NormalForm normalize(const Circuit &c) {
  NormalForm acc = NormalForm::identity(c.k);
  for (size_t n = 0; n < c.gates.size(); ++n) {
    const Gate &g = c.gates[n];
    NormalForm step;
    if (g.kind == GateKind::CZ) {
      step = NormalForm::cz(c.k, g.q0, g.q1);
    } else if (g.kind == GateKind::SWAP) {
      step = NormalForm::swap(c.k, g.q0, g.q1);
    } else {
      throw DomainError("gate " + std::to_string(n) + " (" + g.to_string() + ") is not a c-Z or SWAP gate");
    }
    acc = nf_product(step, acc);
  }
  return acc;
}

Circuit synthesize_complete(const NormalForm &nf) {
  const int k = nf.k();
  std::vector<Gate> gates;
  for (auto [i, j] : conjugate_pairs(nf.perm.inverse(), nf.phase).pairs()) gates.push_back(Gate::cz(i, j));
  for (const auto &cyc : nf.perm.cycles()) {
    for (size_t n = cyc.size() - 1; n > 0; --n) gates.push_back(Gate::swap(cyc[n - 1], cyc[n]));
  }
  return Circuit(k, std::move(gates));
}

GeneratorWord rothe_reduced_word(const Permutation &sigma) {
  const int k = sigma.k();
  const Permutation inv = sigma.inverse();
  GeneratorWord w{k, {}};
  // label[r][c]: position of cell (r,c) in its column, offset by c
  std::vector<std::vector<int>> label(k, std::vector<int>(k, -1));
  for (int c = 0; c < k; ++c) {
    int depth = 0;
    for (int r = 0; r < k; ++r) {
      if (r < inv(c) && sigma(r) > c) label[r][c] = c + depth++;
    }
  }
  for (int r = 0; r < k; ++r) {
    for (int c = k - 1; c >= 0; --c) {
      if (label[r][c] >= 0) w.letters.push_back(Letter::s(label[r][c]));
    }
  }
  return w;
}

GeneratorWord free_reduce(const GeneratorWord &w) {
  GeneratorWord r{w.k, {}};
  for (const auto &l : w.letters) {
    if (!r.letters.empty() && r.letters.back() == l) {
      r.letters.pop_back();
    } else {
      r.letters.push_back(l);
    }
  }
  return r;
}

namespace {

int letter_slot(const Letter &l) { return 2 * l.lo + (l.kind == Letter::Kind::S ? 1 : 0); }

// Bilinear form of the reflection representation: -cos(pi/m).
RingScalar form_entry(int m) {
  switch (m) {
    case 1:
      return RingScalar(1);
    case 2:
      return RingScalar();
    case 3:
      return RingScalar(mpq_class(-1, 2));
    case 4:
      return RingScalar(0, mpq_class(-1, 2), 0, 0);
    default:
      throw DomainError("unsupported Coxeter exponent");
  }
}

class Reflections {
 public:
  explicit Reflections(int k) : dim_(2 * (k - 1)), form_(dim_, std::vector<RingScalar>(dim_)) {
    std::vector<Letter> letters(dim_);
    for (int i = 0; i + 1 < k; ++i) {
      letters[2 * i] = Letter::z(i);
      letters[2 * i + 1] = Letter::s(i);
    }
    for (int a = 0; a < dim_; ++a) {
      for (int b = 0; b < dim_; ++b) form_[a][b] = form_entry(coxeter_exponent(letters[a], letters[b]));
    }
  }

  std::vector<RingScalar> root(int a) const {
    std::vector<RingScalar> v(dim_);
    v[a] = RingScalar(1);
    return v;
  }

  void reflect(int a, std::vector<RingScalar> &v) const {
    RingScalar pairing;
    for (int b = 0; b < dim_; ++b) {
      if (!v[b].is_zero() && !form_[a][b].is_zero()) pairing += form_[a][b] * v[b];
    }
    v[a] -= RingScalar(2) * pairing;
  }

  static bool negative(const std::vector<RingScalar> &v) {
    for (const auto &x : v) {
      if (int s = x.sign(); s != 0) return s < 0;
    }
    return false;
  }

 private:
  int dim_;
  std::vector<std::vector<RingScalar>> form_;
};

bool matches_at(const std::vector<Letter> &w, size_t pos, const std::vector<Letter> &r, size_t len) {
  if (pos + len > w.size()) return false;
  return std::equal(r.begin(), r.begin() + static_cast<long>(len), w.begin() + static_cast<long>(pos));
}

std::vector<Letter> splice(const std::vector<Letter> &w, size_t pos, size_t len, const std::vector<Letter> &r,
                           size_t cut) {
  std::vector<Letter> out(w.begin(), w.begin() + static_cast<long>(pos));
  for (size_t n = r.size(); n > cut; --n) out.push_back(r[n - 1]);
  out.insert(out.end(), w.begin() + static_cast<long>(pos + len), w.end());
  return out;
}

void require_line(const GeneratorWord &w) {
  if (!w.is_line()) throw DomainError("word '" + w.to_string() + "' uses non-adjacent letters");
}

// One leftmost, longest-prefix Dehn replacement; false if none applies.
bool dehn_step(GeneratorWord &w, const RelationSet &r) {
  const auto &rels = r.relators();
  for (size_t pos = 0; pos < w.letters.size(); ++pos) {
    const GeneratorWord *best = nullptr;
    size_t best_len = 0;
    for (const auto &rel : rels) {
      if (rel.letters.front() != w.letters[pos]) continue;
      size_t n = rel.size();
      for (size_t len = n; 2 * len > n; --len) {
        if (len <= best_len) break;
        if (matches_at(w.letters, pos, rel.letters, len)) {
          best = &rel;
          best_len = len;
          break;
        }
      }
    }
    if (best) {
      w.letters = splice(w.letters, pos, best_len, best->letters, best_len);
      w = free_reduce(w);
      return true;
    }
  }
  return false;
}

}  // namespace

GeneratorWord coxeter_reduce(const GeneratorWord &w) {
  require_line(w);
  if (w.k < 2) return w;
  Reflections refl(w.k);
  std::vector<int> u;
  for (const auto &l : w.letters) {
    const int t = letter_slot(l);
    // chain[j] = u_j ... u_{m-1}(alpha_t)
    std::vector<std::vector<RingScalar>> chain(u.size() + 1);
    chain[u.size()] = refl.root(t);
    for (size_t j = u.size(); j > 0; --j) {
      chain[j - 1] = chain[j];
      refl.reflect(u[j - 1], chain[j - 1]);
    }
    if (!Reflections::negative(chain[0])) {
      u.push_back(t);
      continue;
    }
    for (size_t j = u.size(); j > 0; --j) {
      if (Reflections::negative(chain[j - 1])) {
        u.erase(u.begin() + static_cast<long>(j - 1));
        break;
      }
    }
  }
  GeneratorWord r{w.k, {}};
  for (int slot : u) r.letters.push_back(slot % 2 ? Letter::s(slot / 2) : Letter::z(slot / 2));
  return r;
}

GeneratorWord dehn_reduce(const GeneratorWord &w, const RelationSet &r) {
  if (w.k != r.k()) throw DomainError("dehn_reduce: word and relation set differ in qubit count");
  require_line(w);
  GeneratorWord cur = free_reduce(w);
  while (true) {
    cur = coxeter_reduce(cur);
    if (!dehn_step(cur, r)) return cur;
  }
}

GeneratorWord heuristic_line_reduce(const GeneratorWord &w, size_t budget) {
  require_line(w);
  if (w.k < 2) return w;
  const RelationSet rels = RelationSet::line(w.k);
  using Key = std::vector<Letter>;
  auto better = [](const Key &a, const Key &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  auto worse = [&](const Key &a, const Key &b) { return better(b, a); };
  std::priority_queue<Key, std::vector<Key>, decltype(worse)> queue(worse);
  std::set<Key> seen;

  Key best = w.letters;
  auto offer = [&](Key k) {
    if (better(k, best)) best = k;
    if (seen.insert(k).second) queue.push(std::move(k));
  };
  offer(dehn_reduce(w, rels).letters);

  for (size_t expanded = 0; expanded < budget && !queue.empty(); ++expanded) {
    Key cur = queue.top();
    queue.pop();
    for (size_t pos = 0; pos < cur.size(); ++pos) {
      for (const auto &rel : rels.relators()) {
        if (rel.letters.front() != cur[pos]) continue;
        const size_t n = rel.size();
        for (size_t len = n; 2 * len >= n; --len) {
          if (!matches_at(cur, pos, rel.letters, len)) continue;
          offer(free_reduce({w.k, splice(cur, pos, len, rel.letters, len)}).letters);
        }
      }
    }
  }
  return {w.k, best};
}

GeneratorWord bfs_minimize(const NormalForm &nf, Topology t) {
  return enumerate_group(nf.k(), t)->word_of(nf);
}

}  // namespace czs
