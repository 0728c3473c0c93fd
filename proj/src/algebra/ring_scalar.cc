#include "czs/ring_scalar.h"

#include <cmath>
#include <ostream>
#include <sstream>

#include "czs/error.h"

namespace czs {

namespace {

// (a + b sqrt2) * (c + d sqrt2) over Q, written into (ra, rb).
void mul_q2(const mpq_class &a, const mpq_class &b, const mpq_class &c, const mpq_class &d,
            mpq_class &ra, mpq_class &rb) {
  ra = a * c + 2 * b * d;
  rb = a * d + b * c;
}

std::string q2_to_string(const mpq_class &a, const mpq_class &b) {
  std::ostringstream out;
  if (sgn(b) == 0) {
    out << a.get_str();
  } else if (sgn(a) == 0) {
    out << b.get_str() << "√2";
  } else {
    out << a.get_str() << (sgn(b) < 0 ? " - " : " + ") << mpq_class(abs(b)).get_str() << "√2";
  }
  return out.str();
}

}  // namespace

RingScalar::RingScalar(mpq_class re_a, mpq_class re_b, mpq_class im_a, mpq_class im_b)
    : re_a_(std::move(re_a)), re_b_(std::move(re_b)), im_a_(std::move(im_a)), im_b_(std::move(im_b)) {
  re_a_.canonicalize();
  re_b_.canonicalize();
  im_a_.canonicalize();
  im_b_.canonicalize();
}

RingScalar RingScalar::inv_sqrt2_pow(int n) {
  if (n < 0) throw DomainError("inv_sqrt2_pow: negative exponent");
  mpz_class den = mpz_class(1) << (n / 2);
  if (n % 2 == 0) return RingScalar(mpq_class(mpz_class(1), den));
  // 1/sqrt(2^(2m+1)) = sqrt2 / 2^(m+1)
  return RingScalar(0, mpq_class(mpz_class(1), den * 2), 0, 0);
}

bool RingScalar::is_zero() const {
  return sgn(re_a_) == 0 && sgn(re_b_) == 0 && sgn(im_a_) == 0 && sgn(im_b_) == 0;
}

int RingScalar::sign() const {
  if (!is_real()) throw DomainError("sign of a non-real scalar");
  int sa = sgn(re_a_), sb = sgn(re_b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 2 b^2
  int c = cmp(re_a_ * re_a_, 2 * re_b_ * re_b_);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

RingScalar &RingScalar::operator+=(const RingScalar &o) {
  re_a_ += o.re_a_;
  re_b_ += o.re_b_;
  im_a_ += o.im_a_;
  im_b_ += o.im_b_;
  return *this;
}

RingScalar &RingScalar::operator-=(const RingScalar &o) {
  re_a_ -= o.re_a_;
  re_b_ -= o.re_b_;
  im_a_ -= o.im_a_;
  im_b_ -= o.im_b_;
  return *this;
}

RingScalar &RingScalar::operator*=(const RingScalar &o) {
  bool rat = is_real() && is_gaussian_rational();
  bool orat = o.is_real() && o.is_gaussian_rational();
  if (rat && orat) {
    re_a_ *= o.re_a_;
    return *this;
  }
  // (p + i q)(r + i s) with p, q, r, s in Q(sqrt2)
  mpq_class pr_a, pr_b, qs_a, qs_b, ps_a, ps_b, qr_a, qr_b;
  mul_q2(re_a_, re_b_, o.re_a_, o.re_b_, pr_a, pr_b);
  mul_q2(im_a_, im_b_, o.im_a_, o.im_b_, qs_a, qs_b);
  mul_q2(re_a_, re_b_, o.im_a_, o.im_b_, ps_a, ps_b);
  mul_q2(im_a_, im_b_, o.re_a_, o.re_b_, qr_a, qr_b);
  re_a_ = pr_a - qs_a;
  re_b_ = pr_b - qs_b;
  im_a_ = ps_a + qr_a;
  im_b_ = ps_b + qr_b;
  return *this;
}

RingScalar &RingScalar::operator/=(const RingScalar &o) {
  if (o.is_zero()) throw DomainError("division by zero scalar");
  // o * sqrt2_conj(o) is sqrt2-free: a Gaussian rational n.
  RingScalar c = o.sqrt2_conj();
  RingScalar n = o * c;
  mpq_class norm = n.re_a_ * n.re_a_ + n.im_a_ * n.im_a_;
  RingScalar inv_n(n.re_a_ / norm, 0, -n.im_a_ / norm, 0);
  *this *= c;
  *this *= inv_n;
  return *this;
}

bool RingScalar::operator==(const RingScalar &o) const {
  return re_a_ == o.re_a_ && re_b_ == o.re_b_ && im_a_ == o.im_a_ && im_b_ == o.im_b_;
}

std::complex<double> RingScalar::to_complex() const {
  const double r2 = std::sqrt(2.0);
  return {re_a_.get_d() + re_b_.get_d() * r2, im_a_.get_d() + im_b_.get_d() * r2};
}

std::string RingScalar::to_string() const {
  bool has_re = sgn(re_a_) != 0 || sgn(re_b_) != 0;
  bool has_im = sgn(im_a_) != 0 || sgn(im_b_) != 0;
  if (!has_im) return q2_to_string(re_a_, re_b_);
  std::string im = "i(" + q2_to_string(im_a_, im_b_) + ")";
  if (!has_re) return im;
  return q2_to_string(re_a_, re_b_) + " + " + im;
}

std::ostream &operator<<(std::ostream &out, const RingScalar &v) { return out << v.to_string(); }

}  // namespace czs
