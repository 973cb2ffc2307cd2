#include "eqmot/sigmacx/weight0.hpp"

#include "eqmot/abgrp/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace eqmot {

namespace {

bool in_support(int a, int p) {
  if (p >= 0) return a <= 0 && a >= -p;
  return a >= 0 && a <= -p;
}

}  // namespace

FgAbelianGroup weight0(int a, int p, unsigned long m) {
  if (m != 0 && !is_prime(m)) throw std::invalid_argument("modulus " + std::to_string(m) + " is not prime");
  if (!in_support(a, p)) return {};
  return build_sigma_complex({p, OrbitType::fixed}).cohomology(a, m);
}

Weight0Engine::Entry& Weight0Engine::entry(int p, OrbitType type) {
  auto key = std::make_pair(p, type == OrbitType::fixed ? 0 : 1);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    Entry e;
    e.complex = std::make_shared<const CochainComplex>(build_sigma_complex({p, type}));
    it = cache_.emplace(key, std::move(e)).first;
  }
  return it->second;
}

ComplexPtr Weight0Engine::complex(int p, OrbitType type) {
  if (std::abs(p) > max_abs_p_)
    throw std::out_of_range("|p| = " + std::to_string(std::abs(p)) + " exceeds the configured bound " +
                            std::to_string(max_abs_p_));
  std::lock_guard<std::mutex> lock(mutex_);
  return entry(p, type).complex;
}

const Weight0Engine::DifferentialData& Weight0Engine::data(Entry& e, int degree, unsigned long m) {
  DifferentialData& d = e.differentials[degree];
  if (m == 0 && !d.has_diagonal) {
    d.diagonal = smith_diagonal(e.complex->differential(degree));
    d.has_diagonal = true;
  }
  if (m != 0 && !d.rank_mod.count(m)) d.rank_mod[m] = rank_mod_prime(e.complex->differential(degree), m);
  return d;
}

FgAbelianGroup Weight0Engine::group(int a, int p, unsigned long m) {
  return complex_cohomology(a, p, OrbitType::fixed, m);
}

FgAbelianGroup Weight0Engine::complex_cohomology(int a, int p, OrbitType type, unsigned long m) {
  if (m != 0 && !is_prime(m)) throw std::invalid_argument("modulus " + std::to_string(m) + " is not prime");
  if (!in_support(a, p)) return {};
  if (std::abs(p) > max_abs_p_)
    throw std::out_of_range("|p| = " + std::to_string(std::abs(p)) + " exceeds the configured bound " +
                            std::to_string(max_abs_p_));
  std::lock_guard<std::mutex> lock(mutex_);
  Entry& e = entry(p, type);
  std::size_t n = e.complex->rank(a);
  const DifferentialData& in = data(e, a - 1, m);
  const DifferentialData& out = data(e, a, m);
  if (m != 0) return FgAbelianGroup::elementary(m, n - in.rank_mod.at(m) - out.rank_mod.at(m));
  std::size_t free = n - in.diagonal.size() - out.diagonal.size();
  return FgAbelianGroup::from_cyclic_orders(in.diagonal) + FgAbelianGroup::free(free);
}

}  // namespace eqmot
