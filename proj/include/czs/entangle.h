#ifndef CZS_ENTANGLE_H
#define CZS_ENTANGLE_H

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "czs/circuit.h"
#include "czs/group.h"
#include "czs/multi_poly.h"
#include "czs/ring_scalar.h"

namespace czs {

enum class Backend { Exact, Float };

/// Amplitudes indexed by basis integer, qubit 0 least significant.
struct PureState {
  int k = 0;
  Backend backend = Backend::Exact;
  std::vector<RingScalar> exact;
  std::vector<std::complex<double>> numeric;
  // Float backend only: an exact unnormalized representative, when one is known.
  std::vector<RingScalar> projective;

  static PureState from_exact(int k, std::vector<RingScalar> amps);
  static PureState from_float(int k, std::vector<std::complex<double>> amps, std::vector<RingScalar> projective = {});

  bool has_exact_form() const { return backend == Backend::Exact || !projective.empty(); }
  // Exact amplitudes, or the projective representative; throws DomainError if neither exists.
  const std::vector<RingScalar> &exact_form() const;
  std::vector<std::complex<double>> as_complex() const;
};

/// One (p0, p1) pair per qubit, pairs[q] for qubit q.
struct ParamSpec {
  std::vector<std::pair<RingScalar, RingScalar>> pairs;
  int k() const { return static_cast<int>(pairs.size()); }
  std::string to_string() const;
};

// Each component num/den with num, den = 1 + (rng() % 97).
ParamSpec random_params(int k, std::mt19937_64 &rng);
// One line per qubit with two tokens; a token is "p/q" or "p/q,r/s" for p/q + i r/s.
ParamSpec parse_params(int k, const std::string &text);
// Parameters as indeterminates: pair q component c is variable (q, c) of a k-pair form.
std::vector<std::pair<MultiPoly, MultiPoly>> symbolic_params(int k);

// Z_E applied to the product state of the parameter pairs.
PureState phi_state(const PairSet &e, const ParamSpec &p);
// Same with polynomial amplitudes in the parameter indeterminates.
std::vector<MultiPoly> phi_state_symbolic(const PairSet &e);
// Invariants of phi_state_symbolic(e) as polynomials in the parameters: Delta for k=3; B, L, M, N, Dxy for k=4.
std::vector<std::pair<std::string, MultiPoly>> symbolic_invariants(const PairSet &e);

enum class NamedState { GHZ, W };
PureState named_state(NamedState name, int k);
Circuit ghz_circuit(int k);

// Result of a polynomial test on either backend. On the float backend values are
// compared against 1e-9 times the largest intermediate magnitude seen.
struct Evaluation {
  bool exact = true;
  std::vector<RingScalar> values;
  std::vector<std::complex<double>> approx;
  double scale = 1.0;

  bool vanishes() const;
  std::string to_string() const;
};

inline constexpr double kFloatTolerance = 1e-9;

// Ground form sum amp * prod_j x^{(j)}_{bit}, pair j reading ket letter j (qubit k-1-j).
MultiPoly ground_form(const std::vector<RingScalar> &amps, int k);

RingScalar delta3(const PureState &s);
Evaluation delta3_eval(const PureState &s);
MultiPoly catalecticant3(const PureState &s);
// The eight trilinear coefficients of the catalecticant, on either backend.
Evaluation catalecticant3_eval(const PureState &s);

enum class Class3 { GHZclass, Wclass, Degenerate };
std::string class3_name(Class3 c);
Class3 classify3(const PureState &s);

struct Invariants4 {
  RingScalar B, L, M, N, Dxy;
};

struct Quartic {
  // Q = alpha x^4 - 4 beta x^3 y + 6 gamma x^2 y^2 - 4 delta x y^3 + omega y^4
  RingScalar alpha, beta, gamma, delta, omega;

  // Raw coefficients of x^4, x^3 y, x^2 y^2, x y^3, y^4.
  static Quartic from_coefficients(const std::array<RingScalar, 5> &c);
  std::array<RingScalar, 5> coefficients() const;
  // Binary form in the single pair (x, y) = (x0_0, x0_1).
  MultiPoly polynomial() const;
  RingScalar evaluate(const RingScalar &x, const RingScalar &y) const;
  bool is_zero() const;

  RingScalar i2() const;
  RingScalar i3() const;
  RingScalar discriminant() const;
  MultiPoly hessian() const;
  MultiPoly t_covariant() const;
  std::string to_string() const;
};

enum class RootConfig { FourDistinct, OneDouble, TwoDoubles, Triple, Quadruple };
std::string root_config_name(RootConfig r);
RootConfig root_config(const Quartic &q);

Invariants4 invariants4(const PureState &s);
std::array<Quartic, 3> quartics_from(const Invariants4 &inv);
std::array<Quartic, 3> quartics(const PureState &s);

struct Covariants4 {
  MultiPoly C_cov, D_cov, Gbar, G_cov, H_cov, K3, L_cov, K5;
};
Covariants4 covariants4(const PureState &s);

struct CheckResult {
  std::string name;
  bool holds;
};

struct Phi4Classification {
  int case_label = 0;
  std::string shape;
  std::string annotation;  // degenerate family name, empty when none applies
  Invariants4 invariants;
  std::array<Quartic, 3> quartic_forms;
  std::array<RootConfig, 3> roots{};
  std::vector<CheckResult> checks;
  bool signature_holds() const;
};

// Case label 1..11 from the isomorphism type of E as a graph on 4 vertices.
int phi4_case(const PairSet &e);
Phi4Classification classify_phi4(const PairSet &e, const ParamSpec &p);

/// Candidate common zero, pair j for qubit j.
struct SystemSolution {
  std::vector<std::pair<RingScalar, RingScalar>> pairs;
  std::string to_string() const;
};

// True iff the ground form and all its first partials vanish at sol and no pair is (0,0).
bool hyperdet_system_check(const PureState &s, const SystemSolution &sol);

struct TabulatedSolution {
  std::optional<SystemSolution> solution;
  std::string representative;  // class representative pair set
  bool table_row_ok = false;
  std::string discrepancy;  // why the tabulated row failed, empty when it passed
};

// Table lookup through the class representative, verified, with exact fallback search.
TabulatedSolution tabulated_solution_5q(const PairSet &e, const ParamSpec &p);
// Exact search for a nontrivial common zero of phi_state(e, p), any k.
std::optional<SystemSolution> search_solution(const PairSet &e, const ParamSpec &p);

bool ghz_generic(int k);

}  // namespace czs

#endif
