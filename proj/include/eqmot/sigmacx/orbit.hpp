#pragma once

#include "eqmot/abgrp/integer_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eqmot {

enum class OrbitType { fixed, free };

// A class {v, v̄} in {0,1}^arity under global complement, stored by its
// lexicographically smaller representative.  Coordinate 0 is the most
// significant bit, so numeric order is lexicographic order.  Free orbits carry
// one extra coordinate, placed last.
struct Orbit {
  unsigned arity = 0;
  std::uint32_t bits = 0;

  std::string label() const;  // "ε" or e.g. "[01]"
  bool operator==(const Orbit&) const = default;
};

constexpr unsigned max_orbit_arity = 30;

unsigned orbit_arity(unsigned j, OrbitType type);
std::size_t orbit_count(unsigned j, OrbitType type);
std::vector<Orbit> orbit_basis(unsigned j, OrbitType type);

// canonical representative of the class of v
std::uint32_t canonical_bits(std::uint32_t v, unsigned arity);
// index of an orbit inside orbit_basis (the canonical bits themselves)
inline std::size_t orbit_index(std::uint32_t v, unsigned arity) { return arity == 0 ? 0 : canonical_bits(v, arity); }

std::uint32_t drop_coordinate(std::uint32_t v, unsigned arity, unsigned coordinate);
std::uint32_t insert_coordinate(std::uint32_t v, unsigned arity, unsigned coordinate, unsigned value);

// cycle pushforward along deleting coordinate drop_index (1-based) of C_2^j
IntegerMatrix push_matrix(unsigned j, unsigned drop_index, OrbitType type);
// cycle pullback from C_2^{j-1} to C_2^j inserting coordinate insert_index (1-based)
IntegerMatrix pull_matrix(unsigned j, unsigned insert_index, OrbitType type);

}  // namespace eqmot
