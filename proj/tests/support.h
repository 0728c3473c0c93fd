#ifndef CZS_TESTS_SUPPORT_H
#define CZS_TESTS_SUPPORT_H

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "czs/circuit.h"
#include "czs/entangle.h"
#include "czs/word.h"

namespace czs {

inline void PrintTo(const MultiPoly &p, std::ostream *os) { *os << p.to_string(); }
inline void PrintTo(const NormalForm &nf, std::ostream *os) { *os << nf.to_string(); }
inline void PrintTo(const GeneratorWord &w, std::ostream *os) { *os << "[" << w.to_string() << "]"; }

}  // namespace czs

namespace czs::testing {

inline Circuit random_cz_swap_circuit(std::mt19937_64 &rng, int k, int length) {
  Circuit c(k);
  for (int n = 0; n < length; ++n) {
    int i = static_cast<int>(rng() % k), j = static_cast<int>(rng() % (k - 1));
    if (j >= i) ++j;
    c.gates.push_back(rng() % 2 ? Gate::cz(i, j) : Gate::swap(i, j));
  }
  return c;
}

inline Permutation random_permutation(std::mt19937_64 &rng, int k) {
  std::vector<int> images(k);
  for (int i = 0; i < k; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

inline PairSet pair_set_from_mask(int k, uint64_t mask) {
  PairSet e(k);
  int slot = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j, ++slot) {
      if (mask >> slot & 1U) e.toggle(i, j);
    }
  }
  return e;
}

using Cd = std::complex<double>;
using Mat2 = std::array<std::array<Cd, 2>, 2>;

inline std::vector<Cd> apply_1q(std::vector<Cd> s, int q, const Mat2 &m) {
  for (size_t b = 0; b < s.size(); ++b) {
    if (b >> q & 1U) continue;
    const size_t b1 = b | (size_t{1} << q);
    const Cd v0 = s[b], v1 = s[b1];
    s[b] = m[0][0] * v0 + m[0][1] * v1;
    s[b1] = m[1][0] * v0 + m[1][1] * v1;
  }
  return s;
}

inline std::vector<Cd> apply_cz(std::vector<Cd> s, int i, int j) {
  for (size_t b = 0; b < s.size(); ++b) {
    if ((b >> i & 1U) && (b >> j & 1U)) s[b] = -s[b];
  }
  return s;
}

inline Mat2 mat_mul(const Mat2 &a, const Mat2 &b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return r;
}

inline Mat2 ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {{{c, -s}, {s, c}}};
}

// Z_{12} applied to (Ry(pi/4) H X on qubit 2, Ry(pi/4) on qubit 1, H X on qubit 0) Z_01 Z_12 |+>^3 (unnormalized).
inline PureState crossing_state() {
  const double r = 1 / std::sqrt(2.0);
  const Mat2 h{{{r, r}, {r, -r}}}, x{{{0, 1}, {1, 0}}};
  const Mat2 hx = mat_mul(h, x), ryq = ry(M_PI / 4);
  std::vector<Cd> s(8, Cd(1, 0));
  s = apply_cz(apply_cz(s, 0, 1), 1, 2);
  s = apply_1q(s, 2, mat_mul(ryq, hx));
  s = apply_1q(s, 1, ryq);
  s = apply_1q(s, 0, hx);
  s = apply_cz(s, 1, 2);
  return PureState::from_float(3, s);
}

}  // namespace czs::testing

#endif
