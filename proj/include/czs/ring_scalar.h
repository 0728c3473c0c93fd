#ifndef CZS_RING_SCALAR_H
#define CZS_RING_SCALAR_H

#include <complex>
#include <string>

#include <gmpxx.h>

namespace czs {

/// Exact element (re_a + re_b*sqrt2) + i*(im_a + im_b*sqrt2) of Q(i)[sqrt2].
class RingScalar {
 public:
  RingScalar() = default;
  RingScalar(long v) : re_a_(v) {}
  RingScalar(const mpq_class &v) : re_a_(v) { re_a_.canonicalize(); }
  RingScalar(mpq_class re_a, mpq_class re_b, mpq_class im_a, mpq_class im_b);

  static RingScalar gaussian(const mpq_class &re, const mpq_class &im) { return {re, 0, im, 0}; }
  static RingScalar sqrt2() { return {0, 1, 0, 0}; }
  static RingScalar inv_sqrt2() { return {0, mpq_class(1, 2), 0, 0}; }
  static RingScalar i() { return {0, 0, 1, 0}; }
  // 1/sqrt(2^n)
  static RingScalar inv_sqrt2_pow(int n);

  const mpq_class &re_a() const { return re_a_; }
  const mpq_class &re_b() const { return re_b_; }
  const mpq_class &im_a() const { return im_a_; }
  const mpq_class &im_b() const { return im_b_; }

  bool is_zero() const;
  bool is_real() const { return sgn(im_a_) == 0 && sgn(im_b_) == 0; }
  bool is_gaussian_rational() const { return sgn(re_b_) == 0 && sgn(im_b_) == 0; }
  // -1, 0, +1 for real elements; throws DomainError otherwise.
  int sign() const;

  RingScalar conj() const { return {re_a_, re_b_, -im_a_, -im_b_}; }
  // The Galois conjugate sqrt2 -> -sqrt2.
  RingScalar sqrt2_conj() const { return {re_a_, -re_b_, im_a_, -im_b_}; }

  RingScalar operator-() const { return {-re_a_, -re_b_, -im_a_, -im_b_}; }
  RingScalar &operator+=(const RingScalar &o);
  RingScalar &operator-=(const RingScalar &o);
  RingScalar &operator*=(const RingScalar &o);
  RingScalar &operator/=(const RingScalar &o);

  friend RingScalar operator+(RingScalar a, const RingScalar &b) { return a += b; }
  friend RingScalar operator-(RingScalar a, const RingScalar &b) { return a -= b; }
  friend RingScalar operator*(RingScalar a, const RingScalar &b) { return a *= b; }
  friend RingScalar operator/(RingScalar a, const RingScalar &b) { return a /= b; }
  bool operator==(const RingScalar &o) const;
  bool operator!=(const RingScalar &o) const { return !(*this == o); }

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  mpq_class re_a_, re_b_, im_a_, im_b_;
};

std::ostream &operator<<(std::ostream &out, const RingScalar &v);

}  // namespace czs

#endif
