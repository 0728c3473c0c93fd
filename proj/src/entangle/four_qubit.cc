#include <map>
#include <sstream>

#include "czs/entangle.h"
#include "czs/error.h"
#include "forms.h"

namespace czs {

namespace {

void require_four(int k) {
  if (k != 4) throw DomainError("4-qubit computation requested for a " + std::to_string(k) + "-qubit state");
}

MultiPoly monomial_xy(int ex, int ey, const RingScalar &c) {
  MultiPoly p(1);
  Monomial m;
  if (ex) m.emplace_back(0, ex);
  if (ey) m.emplace_back(1, ey);
  p.add_term(m, c);
  return p;
}

}  // namespace

Quartic Quartic::from_coefficients(const std::array<RingScalar, 5> &c) {
  return {c[0], c[1] / RingScalar(-4), c[2] / RingScalar(6), c[3] / RingScalar(-4), c[4]};
}

std::array<RingScalar, 5> Quartic::coefficients() const {
  return {alpha, beta * RingScalar(-4), gamma * RingScalar(6), delta * RingScalar(-4), omega};
}

MultiPoly Quartic::polynomial() const {
  auto c = coefficients();
  MultiPoly p(1);
  for (int n = 0; n < 5; ++n) p += monomial_xy(4 - n, n, c[n]);
  return p;
}

RingScalar Quartic::evaluate(const RingScalar &x, const RingScalar &y) const {
  std::array<RingScalar, 2> v{x, y};
  return polynomial().evaluate(v);
}

bool Quartic::is_zero() const {
  return alpha.is_zero() && beta.is_zero() && gamma.is_zero() && delta.is_zero() && omega.is_zero();
}

RingScalar Quartic::i2() const { return alpha * omega - RingScalar(4) * beta * delta + RingScalar(3) * gamma * gamma; }

RingScalar Quartic::i3() const {
  return alpha * gamma * omega - alpha * delta * delta - omega * beta * beta - gamma * gamma * gamma +
         RingScalar(2) * beta * gamma * delta;
}

RingScalar Quartic::discriminant() const {
  RingScalar a = i2(), b = i3();
  return a * a * a - RingScalar(27) * b * b;
}

MultiPoly Quartic::hessian() const {
  MultiPoly q = polynomial();
  MultiPoly qx = differentiate(q, {0, 0}), qy = differentiate(q, {0, 1});
  MultiPoly qxy = differentiate(qx, {0, 1});
  return differentiate(qx, {0, 0}) * differentiate(qy, {0, 1}) - qxy * qxy;
}

MultiPoly Quartic::t_covariant() const {
  MultiPoly q = polynomial(), h = hessian();
  return differentiate(q, {0, 0}) * differentiate(h, {0, 1}) - differentiate(q, {0, 1}) * differentiate(h, {0, 0});
}

std::string Quartic::to_string() const {
  auto c = coefficients();
  static const char *mon[5] = {"x^4", "x^3y", "x^2y^2", "xy^3", "y^4"};
  std::ostringstream out;
  bool first = true;
  for (int n = 0; n < 5; ++n) {
    if (c[n].is_zero()) continue;
    out << (first ? "" : " + ") << "(" << c[n] << ")" << mon[n];
    first = false;
  }
  return first ? "0" : out.str();
}

std::string root_config_name(RootConfig r) {
  switch (r) {
    case RootConfig::FourDistinct:
      return "four distinct roots";
    case RootConfig::OneDouble:
      return "one double root";
    case RootConfig::TwoDoubles:
      return "two double roots";
    case RootConfig::Triple:
      return "a triple root";
    case RootConfig::Quadruple:
      return "a quadruple root";
  }
  return "?";
}

RootConfig root_config(const Quartic &q) {
  if (q.is_zero()) throw DomainError("root_config: the quartic is identically zero");
  if (!q.discriminant().is_zero()) return RootConfig::FourDistinct;
  if (q.hessian().is_zero()) return RootConfig::Quadruple;
  // A triple root also has T != 0, so I2 = I3 = 0 is tested first.
  if (q.i2().is_zero() && q.i3().is_zero()) return RootConfig::Triple;
  if (q.t_covariant().is_zero()) return RootConfig::TwoDoubles;
  return RootConfig::OneDouble;
}

Invariants4 invariants4(const PureState &s) {
  require_four(s.k);
  auto inv = forms::invariants4(s.exact_form());
  return {inv.B, inv.L, inv.M, inv.N, inv.Dxy};
}

std::array<Quartic, 3> quartics_from(const Invariants4 &v) {
  const RingScalar one(1), two(2), four(4);
  const RingScalar &b = v.B, &l = v.L, &m = v.M, &n = v.N, &d = v.Dxy;
  const RingScalar b2 = b * b;
  Quartic q1 = Quartic::from_coefficients(
      {one, -two * b, b2 + two * l + four * m, four * (d - b * (m + l / two)), l * l});
  Quartic q2 = Quartic::from_coefficients({one, -two * b, b2 - four * l - two * m, four * d - two * m * b, m * m});
  Quartic q3 = Quartic::from_coefficients(
      {one, -two * b, b2 + two * l - two * m, -(two * (l + m) * b - four * d), n * n});
  return {q1, q2, q3};
}

std::array<Quartic, 3> quartics(const PureState &s) { return quartics_from(invariants4(s)); }

namespace {

std::vector<int> orders(const char *s) {
  std::vector<int> o;
  for (; *s; ++s) o.push_back(*s - '0');
  return o;
}

class Ladder {
 public:
  explicit Ladder(MultiPoly a) : a_(std::move(a)) {}
  MultiPoly t(const MultiPoly &g, const char *ord) const { return transvect(a_, g, orders(ord)); }
  const MultiPoly &a() const { return a_; }

 private:
  MultiPoly a_;
};

using Table = std::map<std::string, MultiPoly>;

// Rows of (target, source, orders) shared by the H and J levels.
const std::array<std::array<const char *, 3>, 12> kQuadRows = {{{"4200", "5111", "1011"},
                                                                 {"4020", "5111", "1101"},
                                                                 {"4002", "5111", "1110"},
                                                                 {"0420", "1511", "1101"},
                                                                 {"0402", "1511", "1110"},
                                                                 {"0042", "1151", "1110"},
                                                                 {"2400", "1511", "0111"},
                                                                 {"2040", "1151", "0111"},
                                                                 {"2004", "1115", "0111"},
                                                                 {"0240", "1151", "1011"},
                                                                 {"0204", "1115", "1011"},
                                                                 {"0024", "1115", "1101"}}};

Table quintic_level(const Ladder &lad, const Table &src) {
  Table out;
  out["5111"] = lad.t(src.at("4020"), "0010") + lad.t(src.at("4200"), "0100") + lad.t(src.at("4002"), "0001");
  out["1511"] = lad.t(src.at("0420"), "0010") + lad.t(src.at("2400"), "1000") + lad.t(src.at("0402"), "0001");
  out["1151"] = lad.t(src.at("0240"), "0100") + lad.t(src.at("2040"), "1000") + lad.t(src.at("0042"), "0001");
  out["1115"] = lad.t(src.at("0204"), "0100") + lad.t(src.at("2004"), "1000") + lad.t(src.at("0024"), "0010");
  return out;
}

Table quad_level(const Ladder &lad, const Table &src) {
  Table out;
  for (const auto &[target, from, ord] : kQuadRows) out[target] = lad.t(src.at(from), ord);
  return out;
}

}  // namespace

Covariants4 covariants4(const PureState &s) {
  require_four(s.k);
  if (s.backend != Backend::Exact) throw DomainError("covariants4 needs the exact backend");
  const Ladder lad(ground_form(s.exact, 4));
  const MultiPoly &a = lad.a();
  const RingScalar half(mpq_class(1, 2)), third(mpq_class(1, 3));

  Table b;
  for (auto [name, ord] : {std::pair{"2200", "0011"}, {"2020", "0101"}, {"2002", "0110"}, {"0220", "1001"},
                           {"0202", "1010"}, {"0022", "1100"}}) {
    b[name] = lad.t(a, ord) * half;
  }
  const MultiPoly c1 = lad.t(b["2200"], "1100") + lad.t(b["0022"], "0011");
  Table c;
  c["3111"] = (lad.t(b["2200"], "0100") + lad.t(b["2020"], "0010") + lad.t(b["2002"], "0001")) * third;
  c["1311"] = (lad.t(b["2200"], "1000") + lad.t(b["0220"], "0010") + lad.t(b["0202"], "0001")) * third;
  c["1131"] = (lad.t(b["2020"], "1000") + lad.t(b["0220"], "0100") + lad.t(b["0022"], "0001")) * third;
  c["1113"] = (lad.t(b["2002"], "1000") + lad.t(b["0202"], "0100") + lad.t(b["0022"], "0010")) * third;

  Table d;
  for (auto [name, ord] : {std::pair{"2200", "0011"}, {"2020", "0101"}, {"2002", "0110"}, {"0220", "1001"},
                           {"0202", "1010"}, {"0022", "1100"}}) {
    d[name] = lad.t(c1, ord);
  }
  d["4000"] = lad.t(c["3111"], "0111");
  d["0400"] = lad.t(c["1311"], "1011");
  d["0040"] = lad.t(c["1131"], "1101");
  d["0004"] = lad.t(c["1113"], "1110");

  Table e;
  e["3111"] = lad.t(d["2200"], "0100") + lad.t(d["2020"], "0010") + lad.t(d["2002"], "0001");
  e["1311"] = lad.t(d["2200"], "1000") + lad.t(d["0220"], "0010") + lad.t(d["0202"], "0001");
  e["1131"] = lad.t(d["2020"], "1000") + lad.t(d["0220"], "0100") + lad.t(d["0022"], "0001");
  e["1113"] = lad.t(d["2002"], "1000") + lad.t(d["0202"], "0100") + lad.t(d["0022"], "0010");

  Table f;
  for (auto [name, from, ord] : {std::tuple{"4200", "3111", "0011"}, {"4020", "3111", "0101"}, {"4002", "3111", "0110"},
                                 {"0420", "1311", "1001"}, {"0402", "1311", "1010"}, {"0042", "1131", "1100"},
                                 {"2400", "1311", "0011"}, {"2040", "1131", "0101"}, {"2004", "1113", "0110"},
                                 {"0240", "1131", "1001"}, {"0204", "1113", "1010"}, {"0024", "1113", "1100"}}) {
    f[name] = lad.t(e[from], ord);
  }

  Table g1, g2;
  g1["3111"] = lad.t(f["4200"], "1100");
  g1["1311"] = lad.t(f["2400"], "1100");
  g1["1131"] = lad.t(f["2040"], "1010");
  g1["1113"] = lad.t(f["2004"], "1001");
  g2["3111"] = lad.t(f["4020"], "1010");
  g2["1311"] = lad.t(f["0420"], "0110");
  g2["1131"] = lad.t(f["0240"], "0110");
  g2["1113"] = lad.t(f["0204"], "0101");

  Table g5;
  g5["5111"] = lad.t(f["4002"], "0001") + lad.t(f["4020"], "0010") + lad.t(f["4200"], "0100");
  g5["1511"] = lad.t(f["0402"], "0001") + lad.t(f["0420"], "0010") + lad.t(f["2400"], "1000");
  g5["1151"] = lad.t(f["0042"], "0001") + lad.t(f["0240"], "0100") + lad.t(f["2040"], "1000");
  g5["1115"] = lad.t(f["0204"], "0100") + lad.t(f["0024"], "0010") + lad.t(f["2004"], "1000");

  const Table h = quad_level(lad, g5);
  Table h1;
  h1["2220"] = lad.t(g1["1311"], "0101") + lad.t(g1["3111"], "1001") + lad.t(g1["1131"], "0011");
  h1["2202"] = lad.t(g1["1311"], "0110") + lad.t(g1["3111"], "1010") + lad.t(g1["1113"], "0011");
  h1["2022"] = lad.t(g1["3111"], "1100") + lad.t(g1["1131"], "0110") + lad.t(g1["1113"], "0101");
  h1["0222"] = lad.t(g1["1311"], "1100") + lad.t(g1["1131"], "1010") + lad.t(g1["1113"], "1001");

  const Table i = quintic_level(lad, h);
  const Table j = quad_level(lad, i);

  Table k;
  k["3311"] = lad.t(j.at("4200"), "1000") - lad.t(j.at("2400"), "0100");
  k["3131"] = lad.t(j.at("4020"), "1000") - lad.t(j.at("2040"), "0010");
  k["3113"] = lad.t(j.at("4002"), "1000") - lad.t(j.at("2004"), "0001");
  k["1331"] = lad.t(j.at("0420"), "0100") - lad.t(j.at("0240"), "0010");
  k["1313"] = lad.t(j.at("0402"), "0100") - lad.t(j.at("0204"), "0001");
  k["1133"] = lad.t(j.at("0042"), "0010") - lad.t(j.at("0024"), "0001");
  k["5111"] = lad.t(j.at("4200"), "0100") - lad.t(j.at("4020"), "0010") + lad.t(j.at("4002"), "0001");
  k["1511"] = lad.t(j.at("2400"), "1000") - lad.t(j.at("0420"), "0010") + lad.t(j.at("0402"), "0001");
  k["1151"] = lad.t(j.at("2040"), "1000") - lad.t(j.at("0240"), "0100") + lad.t(j.at("0042"), "0001");
  k["1115"] = lad.t(j.at("2004"), "1000") - lad.t(j.at("0204"), "0100") + lad.t(j.at("0024"), "0010");

  Covariants4 out;
  out.L_cov = lad.t(k["5111"], "0111") + lad.t(k["1511"], "1011") + lad.t(k["1151"], "1101") + lad.t(k["1115"], "1110");
  out.K3 = k["3311"] + k["3131"] + k["3113"] + k["1331"] + k["1313"] + k["1133"];
  out.Gbar = g1["3111"] * g1["1311"] * g1["1131"] * g1["1113"];
  out.G_cov = g2["3111"] + g2["1311"] + g2["1131"] + g2["1113"];
  out.H_cov = h1["2220"] + h1["2202"] + h1["2022"] + h1["0222"];
  out.D_cov = d["4000"] + d["0400"] + d["0040"] + d["0004"];
  out.C_cov = lad.t(b["0220"], "0110") + lad.t(b["2002"], "1001");
  out.K5 = k["5111"] + k["1511"] + k["1151"] + k["1115"];
  return out;
}

int phi4_case(const PairSet &e) {
  require_four(e.k());
  int deg[4] = {0, 0, 0, 0};
  for (auto [i, j] : e.pairs()) {
    ++deg[i];
    ++deg[j];
  }
  int maxdeg = 0, ones = 0;
  for (int v : deg) {
    maxdeg = std::max(maxdeg, v);
    ones += v == 1;
  }
  switch (e.size()) {
    case 0:
      return 1;
    case 1:
      return 2;
    case 2:
      return maxdeg == 2 ? 3 : 4;
    case 3:
      if (maxdeg == 3) return 7;
      return ones == 0 ? 5 : 6;
    case 4:
      return maxdeg == 3 ? 8 : 9;
    case 5:
      return 10;
    default:
      return 11;
  }
}

namespace {

// Quartic shapes of two disjoint edges: exactly one x^3 (x - c y) with c != 0, the other two fourth powers (x - r y)^4.
bool two_pair_shape(const std::array<Quartic, 3> &q) {
  int cubic = -1;
  for (int n = 0; n < 3; ++n) {
    const auto co = q[n].coefficients();
    if (co[0] == RingScalar(1) && !co[1].is_zero() && co[2].is_zero() && co[3].is_zero() && co[4].is_zero()) {
      if (cubic >= 0) return false;
      cubic = n;
    }
  }
  if (cubic < 0) return false;
  const RingScalar one(1), four(4), six(6);
  for (int n = 0; n < 3; ++n) {
    if (n == cubic) continue;
    const auto co = q[n].coefficients();
    const RingScalar root = -co[1] / four;
    const std::array<RingScalar, 5> fourth{one, -four * root, six * root * root, -four * root * root * root,
                                           root * root * root * root};
    if (co != fourth || root.is_zero()) return false;
  }
  return true;
}

// The covariant vanishing for two disjoint edges is stated for E = {{0,1},{2,3}}; other pairings are
// moved there by a qubit relabelling.
PureState relabel_to_01_23(const PureState &s, const PairSet &e) {
  const auto pairs = e.pairs();
  std::vector<int> target(4);
  target[pairs[0].first] = 0;
  target[pairs[0].second] = 1;
  target[pairs[1].first] = 2;
  target[pairs[1].second] = 3;
  const auto &amps = s.exact_form();
  std::vector<RingScalar> moved(16);
  for (uint32_t b = 0; b < 16; ++b) {
    uint32_t nb = 0;
    for (int q = 0; q < 4; ++q) nb |= ((b >> q) & 1U) << target[q];
    moved[nb] = amps[b];
  }
  return PureState::from_exact(4, std::move(moved));
}

}  // namespace

bool Phi4Classification::signature_holds() const {
  for (const auto &c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

Phi4Classification classify_phi4(const PairSet &e, const ParamSpec &p) {
  require_four(e.k());
  static const char *kShapes[12] = {"",     "empty",   "one edge", "two edges sharing a vertex", "two disjoint edges",
                                    "triangle", "path", "star", "triangle with a pendant edge", "4-cycle",
                                    "complete graph minus an edge", "complete graph"};
  static const char *kFamilies[12] = {"", "", "", "", "G_a000", "", "G_ab00", "G_aa00", "G_ab00", "G_ab00", "G_ab00", "G_aa00"};
  Phi4Classification out;
  out.case_label = phi4_case(e);
  out.shape = kShapes[out.case_label];
  out.annotation = kFamilies[out.case_label];

  const PureState s = phi_state(e, p);
  out.invariants = invariants4(s);
  out.quartic_forms = quartics_from(out.invariants);
  for (int n = 0; n < 3; ++n) out.roots[n] = root_config(out.quartic_forms[n]);

  const auto &inv = out.invariants;
  out.checks.push_back({"N = -L - M", inv.N == -inv.L - inv.M});
  out.checks.push_back({"L*M*N = 0", (inv.L * inv.M * inv.N).is_zero()});
  out.checks.push_back({"quartic discriminant = 0", out.quartic_forms[0].discriminant().is_zero()});

  const int c = out.case_label;
  if (c == 1 || c == 2 || c == 3 || c == 5) {
    const Quartic x4 = Quartic::from_coefficients({RingScalar(1), 0, 0, 0, 0});
    bool all = true;
    for (const auto &q : out.quartic_forms) all = all && q.coefficients() == x4.coefficients();
    out.checks.push_back({"each quartic equals x^4", all});
  }
  if (c == 4) {
    out.checks.push_back({"one quartic is x^3(x - c y), the others fourth powers", two_pair_shape(out.quartic_forms)});
  }
  if (c == 4 || c >= 6) {
    const Covariants4 cov = covariants4(c == 4 ? relabel_to_01_23(s, e) : s);
    if (c == 4) {
      out.checks.push_back({"C = 0", cov.C_cov.is_zero()});
      out.checks.push_back({"D = 0", cov.D_cov.is_zero()});
      out.checks.push_back({"K5 = 0", cov.K5.is_zero()});
      out.checks.push_back({"L = 0", cov.L_cov.is_zero()});
    } else if (c <= 10) {
      out.checks.push_back({"K3 = 0", cov.K3.is_zero()});
      out.checks.push_back({"L = 0", cov.L_cov.is_zero()});
    } else {
      out.checks.push_back({"Gbar = 0", cov.Gbar.is_zero()});
      out.checks.push_back({"G = 0", cov.G_cov.is_zero()});
      out.checks.push_back({"H = 0", cov.H_cov.is_zero()});
      out.checks.push_back({"L = 0", cov.L_cov.is_zero()});
    }
  }
  return out;
}

}  // namespace czs
