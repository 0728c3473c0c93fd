#include <cmath>
#include <sstream>

#include "czs/entangle.h"
#include "czs/error.h"
#include "czs/sim.h"

namespace czs {

namespace {

void require_length(int k, size_t n) {
  if (k < 1 || k > 20 || n != (size_t{1} << k)) throw DomainError("amplitude vector does not have length 2^k");
}

mpq_class parse_rational(const std::string &tok) {
  mpq_class v;
  if (tok.empty() || v.set_str(tok, 10) != 0 || (tok.find('/') != std::string::npos && v.get_den() == 0)) {
    throw DomainError("malformed rational '" + tok + "'");
  }
  if (v.get_den() == 0) throw DomainError("zero denominator in '" + tok + "'");
  v.canonicalize();
  return v;
}

RingScalar parse_gaussian(const std::string &tok) {
  auto comma = tok.find(',');
  if (comma == std::string::npos) return RingScalar(parse_rational(tok));
  return RingScalar::gaussian(parse_rational(tok.substr(0, comma)), parse_rational(tok.substr(comma + 1)));
}

}  // namespace

PureState PureState::from_exact(int k, std::vector<RingScalar> amps) {
  require_length(k, amps.size());
  PureState s;
  s.k = k;
  s.backend = Backend::Exact;
  s.exact = std::move(amps);
  return s;
}

PureState PureState::from_float(int k, std::vector<std::complex<double>> amps, std::vector<RingScalar> projective) {
  require_length(k, amps.size());
  if (!projective.empty()) require_length(k, projective.size());
  PureState s;
  s.k = k;
  s.backend = Backend::Float;
  s.numeric = std::move(amps);
  s.projective = std::move(projective);
  return s;
}

const std::vector<RingScalar> &PureState::exact_form() const {
  if (backend == Backend::Exact) return exact;
  if (!projective.empty()) return projective;
  throw DomainError("state has no exact amplitudes; this computation needs the exact backend");
}

std::vector<std::complex<double>> PureState::as_complex() const {
  if (backend == Backend::Float) return numeric;
  std::vector<std::complex<double>> out;
  out.reserve(exact.size());
  for (const auto &a : exact) out.push_back(a.to_complex());
  return out;
}

std::string ParamSpec::to_string() const {
  std::ostringstream out;
  for (size_t q = 0; q < pairs.size(); ++q) {
    out << (q ? " " : "") << "q" << q << "=(" << pairs[q].first << ", " << pairs[q].second << ")";
  }
  return out.str();
}

ParamSpec random_params(int k, std::mt19937_64 &rng) {
  auto draw = [&]() {
    long num = 1 + static_cast<long>(rng() % 97);
    long den = 1 + static_cast<long>(rng() % 97);
    mpq_class v(num, den);
    v.canonicalize();
    return RingScalar(v);
  };
  ParamSpec p;
  for (int q = 0; q < k; ++q) {
    RingScalar a = draw();
    RingScalar b = draw();
    p.pairs.emplace_back(a, b);
  }
  return p;
}

ParamSpec parse_params(int k, const std::string &text) {
  ParamSpec p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw DomainError("parameter line " + std::to_string(lineno) + ": expected two values");
    try {
      p.pairs.emplace_back(parse_gaussian(toks[0]), parse_gaussian(toks[1]));
    } catch (const DomainError &e) {
      throw DomainError("parameter line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (p.k() != k) {
    throw DomainError("expected " + std::to_string(k) + " parameter pairs, found " + std::to_string(p.k()));
  }
  return p;
}

std::vector<std::pair<MultiPoly, MultiPoly>> symbolic_params(int k) {
  std::vector<std::pair<MultiPoly, MultiPoly>> out;
  for (int q = 0; q < k; ++q) out.emplace_back(MultiPoly::variable(k, {q, 0}), MultiPoly::variable(k, {q, 1}));
  return out;
}

namespace {

bool phase_negative(const PairSet &e, uint32_t basis) {
  int parity = 0;
  for (auto [i, j] : e.pairs()) parity ^= static_cast<int>(((basis >> i) & 1U) & ((basis >> j) & 1U));
  return parity != 0;
}

}  // namespace

PureState phi_state(const PairSet &e, const ParamSpec &p) {
  const int k = e.k();
  if (p.k() != k) throw DomainError("phi_state: pair set has " + std::to_string(k) + " qubits but " + std::to_string(p.k()) + " parameter pairs were given");
  for (int q = 0; q < k; ++q) {
    if (p.pairs[q].first.is_zero() && p.pairs[q].second.is_zero()) {
      throw DomainError("phi_state: parameter pair of qubit " + std::to_string(q) + " is zero");
    }
  }
  std::vector<RingScalar> amps(size_t{1} << k);
  for (uint32_t b = 0; b < amps.size(); ++b) {
    RingScalar v(1);
    for (int q = 0; q < k; ++q) v *= ((b >> q) & 1U) ? p.pairs[q].second : p.pairs[q].first;
    amps[b] = phase_negative(e, b) ? -v : v;
  }
  return PureState::from_exact(k, std::move(amps));
}

std::vector<MultiPoly> phi_state_symbolic(const PairSet &e) {
  const int k = e.k();
  auto params = symbolic_params(k);
  std::vector<MultiPoly> amps;
  for (uint32_t b = 0; b < (uint32_t{1} << k); ++b) {
    MultiPoly v = MultiPoly::constant(k, RingScalar(phase_negative(e, b) ? -1 : 1));
    for (int q = 0; q < k; ++q) v = v * (((b >> q) & 1U) ? params[q].second : params[q].first);
    amps.push_back(std::move(v));
  }
  return amps;
}

PureState named_state(NamedState name, int k) {
  if (k < 2 || k > 20) throw DomainError("named states need 2..20 qubits");
  const size_t dim = size_t{1} << k;
  if (name == NamedState::GHZ) {
    std::vector<RingScalar> amps(dim);
    amps.front() = RingScalar::inv_sqrt2();
    amps.back() = RingScalar::inv_sqrt2();
    return PureState::from_exact(k, std::move(amps));
  }
  std::vector<RingScalar> ones(dim);
  for (int q = 0; q < k; ++q) ones[size_t{1} << q] = RingScalar(1);
  // 1/sqrt(k) is in the ring iff k = j^2 or k = 2 j^2.
  for (int j = 1; j * j <= k; ++j) {
    if (j * j == k || 2 * j * j == k) {
      RingScalar c = j * j == k ? RingScalar(mpq_class(1, j)) : RingScalar(0, mpq_class(1, 2 * j), 0, 0);
      for (auto &a : ones) a *= c;
      return PureState::from_exact(k, std::move(ones));
    }
  }
  std::vector<std::complex<double>> amps(dim);
  const double c = 1.0 / std::sqrt(static_cast<double>(k));
  for (int q = 0; q < k; ++q) amps[size_t{1} << q] = c;
  return PureState::from_float(k, std::move(amps), std::move(ones));
}

Circuit ghz_circuit(int k) {
  if (k < 2 || k > kMaxQubits) throw DomainError("ghz_circuit needs 2..32 qubits");
  std::vector<Gate> gates;
  for (int q = 0; q < k; ++q) gates.push_back(Gate::h(q));
  for (int j = 1; j < k; ++j) gates.push_back(Gate::cz(0, j));
  for (int q = 1; q < k; ++q) gates.push_back(Gate::h(q));
  return Circuit(k, std::move(gates));
}

bool Evaluation::vanishes() const {
  if (exact) {
    for (const auto &v : values) {
      if (!v.is_zero()) return false;
    }
    return true;
  }
  for (const auto &v : approx) {
    if (std::abs(v) > kFloatTolerance * scale) return false;
  }
  return true;
}

std::string Evaluation::to_string() const {
  std::ostringstream out;
  if (exact) {
    if (values.size() == 1) return values[0].to_string();
    out << "[";
    for (size_t n = 0; n < values.size(); ++n) out << (n ? ", " : "") << values[n];
    out << "]";
    return out.str();
  }
  out.precision(12);
  out << "[";
  for (size_t n = 0; n < approx.size(); ++n) {
    out << (n ? ", " : "") << approx[n].real();
    if (approx[n].imag() != 0) out << (approx[n].imag() < 0 ? "-" : "+") << std::abs(approx[n].imag()) << "i";
  }
  out << "] (float, tolerance " << kFloatTolerance * scale << ")";
  return out.str();
}

MultiPoly ground_form(const std::vector<RingScalar> &amps, int k) {
  if (amps.size() != (size_t{1} << k)) throw DomainError("ground_form: amplitude count mismatch");
  MultiPoly a(k);
  for (uint32_t b = 0; b < amps.size(); ++b) {
    if (amps[b].is_zero()) continue;
    Monomial m;
    for (int j = 0; j < k; ++j) {
      int bitval = (b >> (k - 1 - j)) & 1U;
      m.emplace_back(static_cast<uint16_t>(2 * j + bitval), 1);
    }
    a.add_term(m, amps[b]);
  }
  return a;
}

}  // namespace czs
