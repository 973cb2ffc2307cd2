#include "eqmot/formal/motivic.hpp"

namespace eqmot {

Coeff parse_coeff(const std::string& text) {
  if (text == "Z" || text == "0") return Coeff::Z;
  if (text == "2" || text == "Z2" || text == "Z/2") return Coeff::Z2;
  throw std::invalid_argument("unknown coefficient '" + text + "', expected Z or 2");
}

std::string coeff_name(Coeff c) { return c == Coeff::Z ? "Z" : "Z/2"; }

unsigned long coeff_modulus(Coeff c) { return c == Coeff::Z ? 0 : 2; }

FormalGroup MotivicOracle::value(int a, int w, Coeff coeff) const {
  if (w < 0 || a > w) return {};
  if (coeff == Coeff::Z) {
    if (w == 0) return a == 0 ? FormalGroup{AtomKind::Z} : FormalGroup{};
    if (w == 1) return a == 1 ? FormalGroup{AtomKind::Kstar} : FormalGroup{};
    return {Atom::mot(a, w)};
  }
  if (a < 0) return {};
  if (a == 0) return {AtomKind::Z2};
  if (a == 1) return {AtomKind::KmodSq};
  return {Atom::et(a, w)};
}

FormalGroup nie_decompose(int a, int q, int b, Coeff coeff, const MotivicOracle& motivic) {
  if (b < 0 || q < 0) throw std::invalid_argument("diagonal decomposition needs b, q >= 0");
  FormalGroup out;
  for (int j = 0; j < q; ++j) {
    out = out + motivic.value(a + 2 * j, b + j, Coeff::Z2);
    if (coeff == Coeff::Z2) out = out + motivic.value(a + 2 * j + 1, b + j, Coeff::Z2);
  }
  return out + motivic.value(a + 2 * q, b + q, coeff);
}

}  // namespace eqmot
