#include "czs/word.h"

#include <algorithm>
#include <sstream>

#include "czs/error.h"

namespace czs {

NormalForm Letter::element(int k) const {
  return kind == Kind::S ? NormalForm::swap(k, lo, hi) : NormalForm::cz(k, lo, hi);
}

std::string Letter::to_string() const {
  std::string out(1, kind == Kind::S ? 's' : 'z');
  out += std::to_string(lo);
  if (!adjacent()) out += "-" + std::to_string(hi);
  return out;
}

bool GeneratorWord::is_line() const {
  return std::all_of(letters.begin(), letters.end(), [](const Letter &l) { return l.adjacent(); });
}

GeneratorWord GeneratorWord::inverse() const {
  GeneratorWord r{k, letters};
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

NormalForm GeneratorWord::evaluate() const {
  NormalForm acc = NormalForm::identity(k);
  for (const auto &l : letters) acc = nf_product(acc, l.element(k));
  return acc;
}

std::string GeneratorWord::to_string() const {
  std::string out;
  for (size_t n = 0; n < letters.size(); ++n) {
    if (n) out += ' ';
    out += letters[n].to_string();
  }
  return out;
}

GeneratorWord parse_word(int k, std::string_view text) {
  if (k < 2 || k > kMaxQubits) throw DomainError("word needs between 2 and 32 qubits");
  GeneratorWord w{k, {}};
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) {
    auto bad = [&](const std::string &why) { throw DomainError("word token '" + tok + "': " + why); };
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'z')) bad("expected s<i> or z<i>");
    Letter l;
    l.kind = tok[0] == 's' ? Letter::Kind::S : Letter::Kind::Z;
    size_t dash = tok.find('-');
    try {
      size_t used = 0;
      l.lo = std::stoi(tok.substr(1, dash == std::string::npos ? std::string::npos : dash - 1), &used);
      l.hi = dash == std::string::npos ? l.lo + 1 : std::stoi(tok.substr(dash + 1));
    } catch (const std::exception &) {
      bad("malformed index");
    }
    if (l.lo < 0 || l.hi >= k || l.lo >= l.hi) bad("index out of range for " + std::to_string(k) + " qubits");
    w.letters.push_back(l);
  }
  return w;
}

Circuit word_to_circuit(const GeneratorWord &w) {
  std::vector<Gate> gates;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) gates.push_back(it->gate());
  return Circuit(w.k, std::move(gates));
}

GeneratorWord circuit_to_word(const Circuit &c) {
  GeneratorWord w{c.k, {}};
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    if (!it->is_two_qubit()) throw DomainError("gate '" + it->to_string() + "' is not a c-Z or SWAP generator");
    Letter::Kind kind = it->kind == GateKind::SWAP ? Letter::Kind::S : Letter::Kind::Z;
    w.letters.push_back({kind, it->q0, it->q1});
  }
  return w;
}

}  // namespace czs
