#include "czs/entangle.h"
#include "czs/error.h"
#include "forms.h"

namespace czs {

std::vector<std::pair<std::string, MultiPoly>> symbolic_invariants(const PairSet &e) {
  const auto amps = phi_state_symbolic(e);
  if (e.k() == 3) return {{"Delta", forms::delta3(amps)}};
  if (e.k() == 4) {
    auto inv = forms::invariants4(amps);
    return {{"B", inv.B}, {"L", inv.L}, {"M", inv.M}, {"N", inv.N}, {"Dxy", inv.Dxy}};
  }
  throw DomainError("symbolic invariants cover 3 and 4 qubits");
}

}  // namespace czs
