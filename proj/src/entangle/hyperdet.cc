#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "czs/entangle.h"
#include "czs/error.h"

namespace czs {

namespace {

using Pair = std::pair<RingScalar, RingScalar>;

const RingScalar &component(const Pair &p, int c) { return c == 0 ? p.first : p.second; }

int bit(size_t b, int q) { return static_cast<int>((b >> q) & 1U); }

// Value of sum_b t[b] prod_{q != skip} x_q[b_q] restricted to b_skip = c (skip < 0: full form).
RingScalar contract(const std::vector<RingScalar> &t, int k, const std::vector<Pair> &x, int skip, int c) {
  RingScalar sum;
  for (size_t b = 0; b < t.size(); ++b) {
    if (t[b].is_zero()) continue;
    if (skip >= 0 && bit(b, skip) != c) continue;
    RingScalar term = t[b];
    for (int q = 0; q < k && !term.is_zero(); ++q) {
      if (q != skip) term *= component(x[q], bit(b, q));
    }
    sum += term;
  }
  return sum;
}

bool system_vanishes(const std::vector<RingScalar> &t, int k, const std::vector<Pair> &x) {
  for (const auto &p : x) {
    if (p.first.is_zero() && p.second.is_zero()) return false;
  }
  if (!contract(t, k, x, -1, 0).is_zero()) return false;
  for (int q = 0; q < k; ++q) {
    for (int c = 0; c < 2; ++c) {
      if (!contract(t, k, x, q, c).is_zero()) return false;
    }
  }
  return true;
}

struct Gauss {
  long long re = 0, im = 0;
  bool zero() const { return re == 0 && im == 0; }
  friend Gauss operator+(Gauss a, Gauss b) { return {a.re + b.re, a.im + b.im}; }
  friend Gauss operator-(Gauss a, Gauss b) { return {a.re - b.re, a.im - b.im}; }
  friend Gauss operator*(Gauss a, Gauss b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  Gauss operator-() const { return {-re, -im}; }
  RingScalar exact() const { return RingScalar::gaussian(mpq_class(static_cast<long>(re)), mpq_class(static_cast<long>(im))); }
};

using GPair = std::array<Gauss, 2>;
using GMat = std::array<std::array<Gauss, 2>, 2>;

const std::vector<GPair> &candidates() {
  static const std::vector<GPair> c = [] {
    std::vector<GPair> v{{Gauss{1, 0}, Gauss{0, 0}}, {Gauss{0, 0}, Gauss{1, 0}}};
    for (Gauss m : {Gauss{1, 0}, Gauss{-1, 0}, Gauss{0, 1}, Gauss{0, -1}, Gauss{1, 1}, Gauss{1, -1}, Gauss{-1, 1},
                    Gauss{-1, -1}}) {
      v.push_back({Gauss{1, 0}, m});
    }
    return v;
  }();
  return c;
}

// A nonzero v with r[0] v[0] + r[1] v[1] = 0 for every row r, if one exists.
std::optional<GPair> common_kernel(const std::vector<GPair> &rows) {
  std::optional<GPair> v;
  for (const auto &r : rows) {
    if (!r[0].zero() || !r[1].zero()) {
      v = GPair{r[1], -r[0]};
      break;
    }
  }
  if (!v) return GPair{Gauss{1, 0}, Gauss{0, 0}};
  for (const auto &r : rows) {
    if (!(r[0] * (*v)[0] + r[1] * (*v)[1]).zero()) return std::nullopt;
  }
  return v;
}

std::optional<Pair> common_kernel(const std::vector<Pair> &rows) {
  for (const auto &r : rows) {
    if (r.first.is_zero() && r.second.is_zero()) continue;
    Pair v{r.second, -r.first};
    for (const auto &o : rows) {
      if (!(o.first * v.first + o.second * v.second).is_zero()) return std::nullopt;
    }
    return v;
  }
  return Pair{RingScalar(1), RingScalar(0)};
}

// 2x2 slice in pairs f1, f2 with the others fixed; override replaces the factor of one fixed pair by e_c.
GMat slice(const std::vector<int> &t, int k, const std::vector<GPair> &w, int f1, int f2, int override_q,
           int override_c) {
  GMat m{};
  for (size_t b = 0; b < t.size(); ++b) {
    Gauss term{t[b], 0};
    for (int q = 0; q < k && !term.zero(); ++q) {
      if (q == f1 || q == f2) continue;
      if (q == override_q) {
        if (bit(b, q) != override_c) term = Gauss{};
      } else {
        term = term * w[q][bit(b, q)];
      }
    }
    m[bit(b, f1)][bit(b, f2)] = m[bit(b, f1)][bit(b, f2)] + term;
  }
  return m;
}

// Common zero of a +-1 tensor and its partials with all pairs in Z[i]^2.
std::optional<std::vector<GPair>> search_sign_tensor(const std::vector<int> &t, int k) {
  const auto &cands = candidates();
  for (int f1 = 0; f1 < k; ++f1) {
    for (int f2 = f1 + 1; f2 < k; ++f2) {
      std::vector<int> fixed;
      for (int q = 0; q < k; ++q) {
        if (q != f1 && q != f2) fixed.push_back(q);
      }
      std::vector<size_t> choice(fixed.size(), 0);
      while (true) {
        std::vector<GPair> w(k);
        for (size_t n = 0; n < fixed.size(); ++n) w[fixed[n]] = cands[choice[n]];
        const GMat m = slice(t, k, w, f1, f2, -1, 0);
        if ((m[0][0] * m[1][1] - m[0][1] * m[1][0]).zero()) {
          std::vector<GMat> parts;
          for (int q : fixed) {
            for (int c = 0; c < 2; ++c) parts.push_back(slice(t, k, w, f1, f2, q, c));
          }
          const bool m_zero = m[0][0].zero() && m[0][1].zero() && m[1][0].zero() && m[1][1].zero();
          if (!m_zero) {
            const GPair right = *common_kernel({{m[0][0], m[0][1]}, {m[1][0], m[1][1]}});
            const GPair left = *common_kernel({{m[0][0], m[1][0]}, {m[0][1], m[1][1]}});
            bool ok = true;
            for (const auto &p : parts) {
              Gauss v;
              for (int a = 0; a < 2; ++a) {
                for (int c = 0; c < 2; ++c) v = v + left[a] * p[a][c] * right[c];
              }
              ok = ok && v.zero();
            }
            if (ok) {
              w[f1] = left;
              w[f2] = right;
              return w;
            }
          } else {
            for (const auto &c1 : cands) {
              std::vector<GPair> rows;
              for (const auto &p : parts) {
                rows.push_back({c1[0] * p[0][0] + c1[1] * p[1][0], c1[0] * p[0][1] + c1[1] * p[1][1]});
              }
              if (auto v = common_kernel(rows)) {
                w[f1] = c1;
                w[f2] = *v;
                return w;
              }
            }
          }
        }
        size_t n = 0;
        while (n < choice.size() && ++choice[n] == cands.size()) choice[n++] = 0;
        if (n == choice.size()) break;
      }
    }
  }
  return std::nullopt;
}

struct PairSetHash {
  size_t operator()(const PairSet &e) const { return e.hash(); }
};

std::optional<std::vector<GPair>> cached_sign_search(const PairSet &e) {
  static std::mutex mu;
  static std::unordered_map<PairSet, std::optional<std::vector<GPair>>, PairSetHash> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  const int k = e.k();
  std::vector<int> t(size_t{1} << k);
  for (size_t b = 0; b < t.size(); ++b) {
    int parity = 0;
    for (auto [i, j] : e.pairs()) parity ^= bit(b, i) & bit(b, j);
    t[b] = parity ? -1 : 1;
  }
  auto found = search_sign_tensor(t, k);
  std::lock_guard lock(mu);
  cache.emplace(e, found);
  return found;
}

}  // namespace

std::string SystemSolution::to_string() const {
  std::ostringstream out;
  for (size_t q = 0; q < pairs.size(); ++q) {
    out << (q ? " " : "") << "(" << pairs[q].first << ", " << pairs[q].second << ")";
  }
  return out.str();
}

bool hyperdet_system_check(const PureState &s, const SystemSolution &sol) {
  if (static_cast<int>(sol.pairs.size()) != s.k) {
    throw DomainError("solution has " + std::to_string(sol.pairs.size()) + " pairs for a " + std::to_string(s.k) +
                      "-qubit state");
  }
  return system_vanishes(s.exact_form(), s.k, sol.pairs);
}

std::optional<SystemSolution> search_solution(const PairSet &e, const ParamSpec &p) {
  const int k = e.k();
  if (k < 2 || k > 6) throw DomainError("solution search supports 2 to 6 qubits");
  const PureState s = phi_state(e, p);
  const auto &amps = s.exact_form();

  for (int q = 0; q < k; ++q) {
    for (int c = 0; c < 2; ++c) {
      if (!component(p.pairs[q], c).is_zero()) continue;
      // Every amplitude with bit q equal to c vanishes; x_q = e_c kills the form and the other partials,
      // leaving a multilinear form in the remaining pairs, solved by a kernel in the last of them.
      std::vector<Pair> x(k, Pair{RingScalar(1), RingScalar(0)});
      x[q] = c == 0 ? Pair{RingScalar(1), RingScalar(0)} : Pair{RingScalar(0), RingScalar(1)};
      const int last = q == k - 1 ? k - 2 : k - 1;
      std::array<RingScalar, 2> f;
      for (size_t b = 0; b < amps.size(); ++b) {
        if (bit(b, q) == c) continue;
        RingScalar term = amps[b];
        for (int r = 0; r < k; ++r) {
          if (r != q && r != last) term *= component(x[r], bit(b, r));
        }
        f[bit(b, last)] += term;
      }
      x[last] = *common_kernel(std::vector<Pair>{{f[0], f[1]}});
      if (system_vanishes(amps, k, x)) return SystemSolution{x};
    }
  }

  // All parameters nonzero: w_q = p_q * x_q turns the system into the one for the +-1 phase tensor of e.
  const auto w = cached_sign_search(e);
  if (!w) return std::nullopt;
  std::vector<Pair> x(k);
  for (int q = 0; q < k; ++q) {
    x[q] = {(*w)[q][0].exact() / p.pairs[q].first, (*w)[q][1].exact() / p.pairs[q].second};
  }
  if (!system_vanishes(amps, k, x)) return std::nullopt;
  return SystemSolution{x};
}

namespace {

using Params = std::vector<Pair>;
using Row = std::function<std::vector<RingScalar>(const Params &)>;

struct TableRow {
  PairSet key;
  Row row;
};

RingScalar frac(const RingScalar &a, const RingScalar &b) { return a / b; }

RingScalar triple_sum(const Params &p, int (*sign_exp)(int, int, int)) {
  RingScalar sum;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int l = 0; l < 2; ++l) {
        RingScalar term = component(p[0], i) * component(p[1], j) * component(p[2], l);
        sum += sign_exp(i, j, l) % 2 ? -term : term;
      }
    }
  }
  return sum;
}

int tri1(int i, int j, int l) { return j * (i + 1) + i * l; }
int tri2(int i, int j, int l) { return i * (j + l); }
int tri3(int i, int j, int l) { return l * (1 + j) + i * j; }
int tri4(int i, int j, int l) { return j * (i + l); }
int tri5(int i, int j, int l) { return l + j * (l + i); }
int tri6(int i, int j, int l) { return j * (i + l); }

PairSet pairs5(const std::vector<std::pair<int, int>> &v) { return PairSet(5, v); }

const std::vector<TableRow> &table5() {
  static const std::vector<TableRow> rows = [] {
    const RingScalar one(1), i = RingScalar::i();
    const RingScalar rot = (i - one) / (i + one);
    // Parameter component shorthands: a0 = p[0].first, a1 = p[0].second, and so on.
    auto r0 = [](const Params &p, int q) { return component(p[q], 0); };
    auto r1 = [](const Params &p, int q) { return component(p[q], 1); };
    auto ratio = [=](const Params &p, int q) { return frac(r1(p, q), r0(p, q)); };
    auto skew = [=](const Params &p, int q) { return frac(r0(p, q) - r1(p, q), r0(p, q) + r1(p, q)); };

    std::vector<TableRow> t;
    auto add = [&](std::vector<std::pair<int, int>> e, Row r) { t.push_back({pairs5(e), std::move(r)}); };
    auto add_comp = [&](std::vector<std::pair<int, int>> e, Row r) {
      t.push_back({PairSet::complete(5) ^ pairs5(e), std::move(r)});
    };

    add({}, [=](const Params &p) { return std::vector<RingScalar>{one, -ratio(p, 1), -ratio(p, 2), one, one}; });
    add({{0, 1}}, [=](const Params &p) { return std::vector<RingScalar>{one, one, one, -ratio(p, 3), -ratio(p, 4)}; });
    add({{0, 1}, {0, 2}},
        [=](const Params &p) { return std::vector<RingScalar>{one, one, one, -ratio(p, 3), -ratio(p, 4)}; });
    add({{0, 1}, {2, 3}}, [=](const Params &p) {
      return std::vector<RingScalar>{one, one, one, -ratio(p, 3) * skew(p, 2), -ratio(p, 4)};
    });
    add({{0, 1}, {0, 2}, {0, 3}},
        [=](const Params &p) { return std::vector<RingScalar>{one, ratio(p, 1), -ratio(p, 2), one, -ratio(p, 4)}; });
    add({{0, 1}, {1, 2}, {0, 2}},
        [=](const Params &p) { return std::vector<RingScalar>{one, one, one, -ratio(p, 3), -ratio(p, 4)}; });
    add({{0, 1}, {0, 2}, {1, 3}}, [=](const Params &p) {
      return std::vector<RingScalar>{one, one, one, -frac(r1(p, 3) * triple_sum(p, tri1), r0(p, 3) * triple_sum(p, tri2)),
                                     -ratio(p, 4)};
    });
    add({{0, 1}, {0, 2}, {3, 4}},
        [=](const Params &p) { return std::vector<RingScalar>{one, one, one, -ratio(p, 3), -ratio(p, 4)}; });
    add({{0, 1}, {0, 2}, {0, 3}, {0, 4}},
        [=](const Params &p) { return std::vector<RingScalar>{one, ratio(p, 1), -ratio(p, 2), one, -ratio(p, 4)}; });
    add({{0, 1}, {0, 2}, {0, 3}, {1, 4}},
        [=](const Params &p) { return std::vector<RingScalar>{one, ratio(p, 1), -ratio(p, 2), one, -ratio(p, 4)}; });
    add({{0, 1}, {1, 2}, {0, 2}, {0, 3}}, [=](const Params &p) {
      return std::vector<RingScalar>{one, -rot * ratio(p, 1), (i + one) * ratio(p, 2), one, -ratio(p, 4)};
    });
    add({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, [=](const Params &p) {
      return std::vector<RingScalar>{ratio(p, 0), ratio(p, 1), -ratio(p, 2), ratio(p, 3), one};
    });
    add({{0, 1}, {2, 3}, {3, 4}, {2, 4}}, [=](const Params &p) {
      return std::vector<RingScalar>{one, one, one, -frac(r1(p, 3) * (r0(p, 2) - r1(p, 2)), r1(p, 3) * (r0(p, 2) + r1(p, 2))),
                                     -ratio(p, 4)};
    });
    add({{0, 1}, {1, 2}, {2, 3}, {3, 4}}, [=](const Params &p) {
      return std::vector<RingScalar>{one, one, one, -frac(r1(p, 3) * triple_sum(p, tri3), r0(p, 3) * triple_sum(p, tri4)),
                                     ratio(p, 4)};
    });
    add({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, [=](const Params &p) {
      return std::vector<RingScalar>{one, one, one, -frac(r1(p, 3) * triple_sum(p, tri5), r0(p, 3) * triple_sum(p, tri6)),
                                     -ratio(p, 4)};
    });
    add({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}}, [=](const Params &p) {
      return std::vector<RingScalar>{one, -ratio(p, 1) * rot, (i + one) * ratio(p, 2), one, -ratio(p, 4)};
    });
    add({{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 2}}, [=](const Params &p) {
      return std::vector<RingScalar>{one, -ratio(p, 1) * rot, (i + one) * ratio(p, 2), one, -ratio(p, 4)};
    });
    add({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, [=](const Params &p) {
      return std::vector<RingScalar>{-i * ratio(p, 0), i * ratio(p, 1) * rot, ratio(p, 2), ratio(p, 3), one};
    });
    add({{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}}, [=](const Params &p) {
      return std::vector<RingScalar>{ratio(p, 0) * rot * skew(p, 1), one, ratio(p, 2) * i, one, one};
    });
    add({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}}, [=](const Params &p) {
      return std::vector<RingScalar>{one, -ratio(p, 1) * rot, i * ratio(p, 2), one, -ratio(p, 4)};
    });

    add_comp({}, [=](const Params &p) {
      return std::vector<RingScalar>{ratio(p, 0), -ratio(p, 1), -ratio(p, 2), ratio(p, 3), one};
    });
    add_comp({{0, 1}}, [=](const Params &p) {
      return std::vector<RingScalar>{ratio(p, 0), -ratio(p, 1), -ratio(p, 2), ratio(p, 3), one};
    });
    add_comp({{0, 1}, {0, 2}}, [=](const Params &p) {
      return std::vector<RingScalar>{one, -ratio(p, 1) * rot, i * ratio(p, 2), one, -ratio(p, 4)};
    });
    add_comp({{0, 1}, {2, 3}}, [=](const Params &p) {
      return std::vector<RingScalar>{ratio(p, 0), -ratio(p, 1) * rot, i * ratio(p, 2), one, -ratio(p, 4)};
    });
    add_comp({{0, 1}, {0, 2}, {0, 3}}, [=](const Params &p) {
      return std::vector<RingScalar>{-ratio(p, 0), -ratio(p, 1) * rot, i * ratio(p, 2), one, one};
    });
    add_comp({{0, 1}, {1, 2}, {0, 2}}, [=](const Params &p) {
      return std::vector<RingScalar>{one, ratio(p, 1), -frac(r0(p, 2), r1(p, 2)), one, -ratio(p, 4)};
    });
    add_comp({{0, 1}, {0, 2}, {1, 3}}, [=](const Params &p) {
      return std::vector<RingScalar>{ratio(p, 0), one, -ratio(p, 1) * skew(p, 2), one, one, -ratio(p, 4)};
    });
    add_comp({{0, 1}, {0, 2}, {3, 4}}, [=](const Params &p) {
      return std::vector<RingScalar>{one, -ratio(p, 1) * rot, i * ratio(p, 2), one, -ratio(p, 4)};
    });
    add_comp({{0, 1}, {0, 2}, {0, 3}, {0, 4}}, [=](const Params &p) {
      return std::vector<RingScalar>{-ratio(p, 0), -ratio(p, 1) * rot, i * ratio(p, 2), one, one};
    });
    add_comp({{0, 1}, {0, 2}, {0, 3}, {1, 4}}, [=](const Params &p) {
      return std::vector<RingScalar>{-ratio(p, 0), -ratio(p, 1) * rot, i * ratio(p, 2), one, one};
    });
    add_comp({{0, 1}, {1, 2}, {0, 2}, {0, 3}}, [=](const Params &p) {
      return std::vector<RingScalar>{-ratio(p, 0), ratio(p, 1), -ratio(p, 2), one, one};
    });
    add_comp({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, [=](const Params &p) {
      return std::vector<RingScalar>{-ratio(p, 0) * skew(p, 2), one, one, -ratio(p, 3) * skew(p, 1), one};
    });
    add_comp({{0, 1}, {2, 3}, {3, 4}, {2, 4}}, [=](const Params &p) {
      return std::vector<RingScalar>{ratio(p, 0), -ratio(p, 1), -ratio(p, 2), frac(r1(p, 3), r1(p, 3)), one};
    });
    add_comp({{0, 1}, {1, 2}, {2, 3}, {3, 4}}, [=](const Params &p) {
      return std::vector<RingScalar>{frac(r0(p, 0), r1(p, 0)) * skew(p, 2), -ratio(p, 1), one, one, -ratio(p, 4)};
    });
    return t;
  }();
  return rows;
}

}  // namespace

TabulatedSolution tabulated_solution_5q(const PairSet &e, const ParamSpec &p) {
  if (e.k() != 5 || p.k() != 5) throw DomainError("tabulated solutions cover 5 qubits only");
  TabulatedSolution out;

  // Find pi with pi(E) equal to a tabulated pair set; qubit q of E plays qubit pi(q) of the representative.
  std::vector<int> images(5);
  std::iota(images.begin(), images.end(), 0);
  const TableRow *match = nullptr;
  Permutation pi;
  do {
    Permutation cand(images);
    const PairSet moved = conjugate_pairs(cand, e);
    for (const auto &row : table5()) {
      if (row.key == moved) {
        match = &row;
        pi = cand;
        break;
      }
    }
  } while (!match && std::next_permutation(images.begin(), images.end()));
  if (!match) throw DomainError("no tabulated class for " + e.to_string());
  out.representative = match->key.to_string();

  Params moved_params(5);
  for (int q = 0; q < 5; ++q) moved_params[pi(q)] = p.pairs[q];
  try {
    const auto entries = match->row(moved_params);
    if (entries.size() != 5) {
      out.discrepancy = "row lists " + std::to_string(entries.size()) + " entries for 5 qubits";
    } else {
      SystemSolution sol;
      for (int q = 0; q < 5; ++q) sol.pairs.emplace_back(entries[pi(q)], RingScalar(1));
      if (hyperdet_system_check(phi_state(e, p), sol)) {
        out.table_row_ok = true;
        out.solution = sol;
        return out;
      }
      out.discrepancy = "row value " + sol.to_string() + " is not a common zero";
    }
  } catch (const DomainError &err) {
    out.discrepancy = std::string("row undefined: ") + err.what();
  }
  out.solution = search_solution(e, p);
  return out;
}

bool ghz_generic(int k) {
  if (k < 2 || k > 8) throw DomainError("ghz_generic supports 2 to 8 qubits");
  const PureState s = named_state(NamedState::GHZ, k);
  const auto &amps = s.exact_form();
  const std::array<Pair, 3> choices{Pair{RingScalar(0), RingScalar(1)}, Pair{RingScalar(1), RingScalar(0)},
                                    Pair{RingScalar(1), RingScalar(1)}};
  std::vector<int> pattern(k, 0);
  while (true) {
    std::vector<Pair> x(k);
    for (int q = 0; q < k; ++q) x[q] = choices[pattern[q]];
    if (system_vanishes(amps, k, x)) return false;
    int n = 0;
    while (n < k && ++pattern[n] == 3) pattern[n++] = 0;
    if (n == k) break;
  }
  return true;
}

}  // namespace czs
