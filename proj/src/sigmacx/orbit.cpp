#include "eqmot/sigmacx/orbit.hpp"

#include <stdexcept>

namespace eqmot {

std::string Orbit::label() const {
  if (arity == 0) return "ε";
  std::string s = "[";
  for (unsigned k = 0; k < arity; ++k) s += ((bits >> (arity - 1 - k)) & 1u) ? '1' : '0';
  return s + "]";
}

unsigned orbit_arity(unsigned j, OrbitType type) { return j + (type == OrbitType::free ? 1 : 0); }

std::size_t orbit_count(unsigned j, OrbitType type) {
  unsigned a = orbit_arity(j, type);
  if (a > max_orbit_arity) throw std::out_of_range("orbit arity too large");
  return a == 0 ? 1 : std::size_t{1} << (a - 1);
}

std::vector<Orbit> orbit_basis(unsigned j, OrbitType type) {
  unsigned a = orbit_arity(j, type);
  std::size_t n = orbit_count(j, type);
  std::vector<Orbit> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = Orbit{a, static_cast<std::uint32_t>(i)};
  return out;
}

std::uint32_t canonical_bits(std::uint32_t v, unsigned arity) {
  if (arity == 0) return 0;
  std::uint32_t mask = arity == 32 ? ~0u : ((1u << arity) - 1u);
  std::uint32_t c = ~v & mask;
  return c < v ? c : v;
}

std::uint32_t drop_coordinate(std::uint32_t v, unsigned arity, unsigned coordinate) {
  unsigned pos = arity - 1 - coordinate;
  std::uint32_t low = v & ((1u << pos) - 1u);
  return ((v >> (pos + 1)) << pos) | low;
}

std::uint32_t insert_coordinate(std::uint32_t v, unsigned arity, unsigned coordinate, unsigned value) {
  // result has arity + 1 coordinates; the new one sits at `coordinate`
  unsigned pos = arity - coordinate;
  std::uint32_t low = v & ((1u << pos) - 1u);
  return ((v >> pos) << (pos + 1)) | (static_cast<std::uint32_t>(value & 1u) << pos) | low;
}

IntegerMatrix push_matrix(unsigned j, unsigned drop_index, OrbitType type) {
  if (drop_index < 1 || drop_index > j)
    throw std::out_of_range("drop index " + std::to_string(drop_index) + " outside 1.." + std::to_string(j));
  unsigned a = orbit_arity(j, type);
  IntegerMatrix m(orbit_count(j - 1, type), orbit_count(j, type));
  for (std::size_t col = 0; col < m.cols(); ++col) {
    if (a - 1 == 0) {
      m(0, col) += 2;
    } else {
      std::uint32_t w = drop_coordinate(static_cast<std::uint32_t>(col), a, drop_index - 1);
      m(orbit_index(w, a - 1), col) += 1;
    }
  }
  return m;
}

IntegerMatrix pull_matrix(unsigned j, unsigned insert_index, OrbitType type) {
  if (insert_index < 1 || insert_index > j)
    throw std::out_of_range("insert index " + std::to_string(insert_index) + " outside 1.." + std::to_string(j));
  unsigned a = orbit_arity(j, type);
  IntegerMatrix m(orbit_count(j, type), orbit_count(j - 1, type));
  for (std::size_t col = 0; col < m.cols(); ++col) {
    if (a - 1 == 0) {
      m(0, col) += 1;
      continue;
    }
    for (unsigned value = 0; value < 2; ++value) {
      std::uint32_t v = insert_coordinate(static_cast<std::uint32_t>(col), a - 1, insert_index - 1, value);
      m(orbit_index(v, a), col) += 1;
    }
  }
  return m;
}

}  // namespace eqmot
