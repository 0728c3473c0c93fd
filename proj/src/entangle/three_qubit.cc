#include <algorithm>
#include <cmath>

#include "czs/entangle.h"
#include "czs/error.h"
#include "forms.h"

namespace czs {

namespace {

void require_three(const PureState &s) {
  if (s.k != 3) throw DomainError("3-qubit invariant requested for a " + std::to_string(s.k) + "-qubit state");
}

// Upper bound on intermediate magnitudes of a degree-d formula.
double float_scale(const std::vector<std::complex<double>> &amps, int degree) {
  double m = 0;
  for (const auto &a : amps) m = std::max(m, std::abs(a));
  return std::max(1.0, std::pow(m, degree));
}

}  // namespace

RingScalar delta3(const PureState &s) {
  require_three(s);
  if (s.backend != Backend::Exact) throw DomainError("delta3: exact value needs the exact backend; use delta3_eval");
  return forms::delta3(s.exact);
}

Evaluation delta3_eval(const PureState &s) {
  require_three(s);
  Evaluation ev;
  if (s.backend == Backend::Exact) {
    ev.values = {forms::delta3(s.exact)};
    return ev;
  }
  ev.exact = false;
  ev.approx = {forms::delta3(s.numeric)};
  ev.scale = float_scale(s.numeric, 4);
  return ev;
}

MultiPoly catalecticant3(const PureState &s) {
  require_three(s);
  const MultiPoly a = ground_form(s.exact_form(), 3);
  // Bx = det of the matrix of second partials in the y and z pairs
  MultiPoly m[2][2];
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) m[j][k] = differentiate(differentiate(a, {1, j}), {2, k});
  }
  const MultiPoly bx = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return differentiate(a, {0, 0}) * differentiate(bx, {0, 1}) - differentiate(a, {0, 1}) * differentiate(bx, {0, 0});
}

Evaluation catalecticant3_eval(const PureState &s) {
  require_three(s);
  Evaluation ev;
  if (s.backend == Backend::Exact) {
    auto c = forms::catalecticant3(s.exact);
    ev.values.assign(c.begin(), c.end());
    return ev;
  }
  ev.exact = false;
  auto c = forms::catalecticant3(s.numeric);
  ev.approx.assign(c.begin(), c.end());
  ev.scale = float_scale(s.numeric, 3);
  return ev;
}

std::string class3_name(Class3 c) {
  switch (c) {
    case Class3::GHZclass:
      return "GHZ";
    case Class3::Wclass:
      return "W";
    case Class3::Degenerate:
      return "degenerate";
  }
  return "?";
}

Class3 classify3(const PureState &s) {
  require_three(s);
  // Zero tests are scale invariant, so an exact projective representative is preferred.
  if (s.has_exact_form()) {
    const auto &amps = s.exact_form();
    if (!forms::delta3(amps).is_zero()) return Class3::GHZclass;
    auto c = forms::catalecticant3(amps);
    bool zero = std::all_of(c.begin(), c.end(), [](const RingScalar &v) { return v.is_zero(); });
    return zero ? Class3::Degenerate : Class3::Wclass;
  }
  if (!delta3_eval(s).vanishes()) return Class3::GHZclass;
  return catalecticant3_eval(s).vanishes() ? Class3::Degenerate : Class3::Wclass;
}

}  // namespace czs
