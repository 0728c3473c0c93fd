#ifndef CZS_ENTANGLE_FORMS_H
#define CZS_ENTANGLE_FORMS_H

// Closed-form invariant formulas over any commutative ring type T (RingScalar,
// std::complex<double>, MultiPoly). Amplitude vectors are indexed by basis integer.

#include <array>
#include <vector>

namespace czs::forms {

// a(i,j,k) = amp[4i + 2j + k]
template <class T>
T delta3(const std::vector<T> &amp) {
  auto a = [&](int i, int j, int k) -> const T & { return amp[4 * i + 2 * j + k]; };
  T first = a(0, 0, 0) * a(1, 1, 1) - a(0, 0, 1) * a(1, 1, 0) - a(0, 1, 0) * a(1, 0, 1) + a(0, 1, 1) * a(1, 0, 0);
  T left = a(0, 0, 0) * a(0, 1, 1) - a(0, 0, 1) * a(0, 1, 0);
  T right = a(1, 0, 0) * a(1, 1, 1) - a(1, 0, 1) * a(1, 1, 0);
  T four = left + left;
  four = four + four;
  return first * first - four * right;
}

// Coefficient of x_i y_j z_k at index 4i + 2j + k in
// dA/dx0 * dBx/dx1 - dA/dx1 * dBx/dx0, Bx = det[d2A/dy_j dz_k].
template <class T>
std::array<T, 8> catalecticant3(const std::vector<T> &amp) {
  auto a = [&](int i, int j, int k) -> const T & { return amp[4 * i + 2 * j + k]; };
  // Bx = sum_{i,i'} x_i x_i' q[i][i']
  T q[2][2] = {{amp[0], amp[0]}, {amp[0], amp[0]}};
  for (int i = 0; i < 2; ++i) {
    for (int ip = 0; ip < 2; ++ip) q[i][ip] = a(i, 0, 0) * a(ip, 1, 1) - a(i, 0, 1) * a(ip, 1, 0);
  }
  // dBx/dx_c = sum_i' x_i' (q[c][i'] + q[i'][c])
  auto dbx = [&](int c, int ip) { return q[c][ip] + q[ip][c]; };
  std::array<T, 8> out{amp[0], amp[0], amp[0], amp[0], amp[0], amp[0], amp[0], amp[0]};
  for (int ip = 0; ip < 2; ++ip) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) out[4 * ip + 2 * j + k] = a(0, j, k) * dbx(1, ip) - a(1, j, k) * dbx(0, ip);
    }
  }
  return out;
}

template <class T>
T det3(const std::array<std::array<T, 3>, 3> &m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class T>
T det4(const std::array<std::array<T, 4>, 4> &m) {
  T total = m[0][0] - m[0][0];
  for (int c = 0; c < 4; ++c) {
    std::array<std::array<T, 3>, 3> minor{{{total, total, total}, {total, total, total}, {total, total, total}}};
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int s = 0; s < 4; ++s) {
        if (s != c) minor[r - 1][cc++] = m[r][s];
      }
    }
    T term = m[0][c] * det3(minor);
    total = c % 2 ? total - term : total + term;
  }
  return total;
}

template <class T>
struct Inv4 {
  T B, L, M, N, Dxy;
};

// a(i,j,k,l) = amp[8i + 4j + 2k + l]
template <class T>
Inv4<T> invariants4(const std::vector<T> &amp) {
  auto a = [&](int i, int j, int k, int l) -> const T & { return amp[8 * i + 4 * j + 2 * k + l]; };
  const T zero = amp[0] - amp[0];
  T b = zero;
  for (int i1 = 0; i1 < 2; ++i1) {
    for (int i2 = 0; i2 < 2; ++i2) {
      for (int i3 = 0; i3 < 2; ++i3) {
        T t = a(0, i1, i2, i3) * a(1, 1 - i1, 1 - i2, 1 - i3);
        b = (i1 + i2 + i3) % 2 ? b - t : b + t;
      }
    }
  }
  std::array<std::array<T, 4>, 4> lm{{{a(0, 0, 0, 0), a(0, 0, 1, 0), a(0, 0, 0, 1), a(0, 0, 1, 1)},
                                      {a(1, 0, 0, 0), a(1, 0, 1, 0), a(1, 0, 0, 1), a(1, 0, 1, 1)},
                                      {a(0, 1, 0, 0), a(0, 1, 1, 0), a(0, 1, 0, 1), a(0, 1, 1, 1)},
                                      {a(1, 1, 0, 0), a(1, 1, 1, 0), a(1, 1, 0, 1), a(1, 1, 1, 1)}}};
  std::array<std::array<T, 4>, 4> mm{{{a(0, 0, 0, 0), a(0, 0, 0, 1), a(0, 1, 0, 0), a(0, 1, 0, 1)},
                                      {a(1, 0, 0, 0), a(1, 0, 0, 1), a(1, 1, 0, 0), a(1, 1, 0, 1)},
                                      {a(0, 0, 1, 0), a(0, 0, 1, 1), a(0, 1, 1, 0), a(0, 1, 1, 1)},
                                      {a(1, 0, 1, 0), a(1, 0, 1, 1), a(1, 1, 1, 0), a(1, 1, 1, 1)}}};
  T l = det4(lm);
  T m = det4(mm);
  // det(d2A/dz_k dt_l) = sum x_i x_i' y_j y_j' (a(i,j,0,0) a(i',j',1,1) - a(i,j,0,1) a(i',j',1,0))
  std::array<std::array<T, 3>, 3> bxy{{{zero, zero, zero}, {zero, zero, zero}, {zero, zero, zero}}};
  for (int i = 0; i < 2; ++i) {
    for (int ip = 0; ip < 2; ++ip) {
      for (int j = 0; j < 2; ++j) {
        for (int jp = 0; jp < 2; ++jp) {
          bxy[i + ip][j + jp] = bxy[i + ip][j + jp] + a(i, j, 0, 0) * a(ip, jp, 1, 1) - a(i, j, 0, 1) * a(ip, jp, 1, 0);
        }
      }
    }
  }
  return {b, l, m, zero - l - m, zero - det3(bxy)};
}

}  // namespace czs::forms

#endif
