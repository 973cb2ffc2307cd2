#pragma once

#include "eqmot/formal/formal_group.hpp"

#include <string>

namespace eqmot {

enum class Coeff { Z, Z2 };

Coeff parse_coeff(const std::string& text);  // "Z", "0", "2", "Z2", "Z/2"
std::string coeff_name(Coeff c);             // "Z" or "Z/2"
unsigned long coeff_modulus(Coeff c);        // 0 or 2

// Motivic cohomology H^{a,w}(k, A) of a field of characteristic zero. Exact in weights
// w <= 1; beyond that only the vanishing a > w is used, the rest stays symbolic.
class MotivicOracle {
 public:
  FormalGroup value(int a, int w, Coeff coeff) const;
};

// ⊕_{j<q} H^{a+2j,b+j}(Z/2) ⊕ H^{a+2q,b+q}(Z) integrally, and with Z/2 coefficients
// ⊕_{j<q} (H^{a+2j,b+j} ⊕ H^{a+2j+1,b+j}) ⊕ H^{a+2q,b+q}; requires b, q >= 0
FormalGroup nie_decompose(int a, int q, int b, Coeff coeff, const MotivicOracle& motivic = {});

}  // namespace eqmot
