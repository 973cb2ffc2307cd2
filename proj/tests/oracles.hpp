#pragma once

// Test-side oracles.  These deliberately avoid the library's own reduction code.

#include "eqmot/abgrp/integer_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using eqmot::Integer;
using eqmot::IntegerMatrix;

// Laplace expansion along the first row
inline Integer laplace_det(const std::vector<std::vector<Integer>>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m[0][j]) == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Integer term = m[0][j] * laplace_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

// gcd of all k x k minors, for k = 1..min(r,c); zero once the rank is exceeded
inline std::vector<Integer> determinantal_divisors(const IntegerMatrix& a) {
  std::size_t lim = std::min(a.rows(), a.cols());
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= lim; ++k) {
    Integer g = 0;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cs) {
        std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(rs[i], cs[j]);
        g = gcd(g, laplace_det(m));
      });
    });
    out.push_back(g);
  }
  return out;
}

// invariant factors (nonzero ones, units included) from determinantal divisors
inline std::vector<Integer> invariant_factors(const IntegerMatrix& a) {
  auto dd = determinantal_divisors(a);
  std::vector<Integer> out;
  Integer prev = 1;
  for (const auto& d : dd) {
    if (sgn(d) == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// random unimodular matrix as a product of elementary operations
inline IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int q = coef(rng);
    for (std::size_t k = 0; k < n; ++k) u(i, k) += q * u(j, k);
  }
  return u;
}

}  // namespace oracle

#include "eqmot/abgrp/fg_group.hpp"
#include "eqmot/abgrp/lattice.hpp"
#include "eqmot/chaincx/chain_map.hpp"

namespace oracle {

// random bounded complex on degrees lo..lo+len-1 with ranks <= 3
inline eqmot::CochainComplex random_complex(std::mt19937_64& rng, int lo, int len) {
  std::uniform_int_distribution<int> rk(0, 3), coef(-3, 3);
  std::map<int, std::size_t> ranks;
  for (int i = 0; i < len; ++i) ranks[lo + i] = rk(rng);
  std::map<int, IntegerMatrix> diffs;
  for (int i = lo; i + 1 < lo + len; ++i) {
    std::size_t r0 = ranks[i], r1 = ranks[i + 1];
    auto prev = diffs.find(i - 1);
    if (prev == diffs.end()) {
      diffs[i] = random_matrix(rng, r1, r0, -3, 3);
      continue;
    }
    // rows must annihilate the image of the previous differential
    IntegerMatrix left_kernel = eqmot::kernel_basis(prev->second.transpose());  // r0 x k
    IntegerMatrix mix = random_matrix(rng, r1, left_kernel.cols(), -1, 1);
    diffs[i] = mix * left_kernel.transpose();
  }
  return eqmot::CochainComplex(ranks, diffs);
}

// a random element of the lattice of chain maps S -> T
inline eqmot::ChainMap random_chain_map(std::mt19937_64& rng, eqmot::ComplexPtr s, eqmot::ComplexPtr t) {
  std::vector<int> degrees;
  for (auto [deg, r] : s->ranks())
    if (t->rank(deg) > 0) degrees.push_back(deg);
  std::map<int, std::size_t> offset;
  std::size_t unknowns = 0;
  for (int deg : degrees) {
    offset[deg] = unknowns;
    unknowns += s->rank(deg) * t->rank(deg);
  }
  // equations f^{i+1} d_S^i - d_T^i f^i = 0, one block per degree i
  std::vector<std::vector<Integer>> rows;
  int lo = std::min(s->min_degree(), t->min_degree()) - 1;
  int hi = std::max(s->max_degree(), t->max_degree()) + 1;
  for (int i = lo; i <= hi; ++i) {
    IntegerMatrix ds = s->differential(i), dt = t->differential(i);
    std::size_t out_rows = t->rank(i + 1), out_cols = s->rank(i);
    for (std::size_t a = 0; a < out_rows; ++a)
      for (std::size_t b = 0; b < out_cols; ++b) {
        std::vector<Integer> eq(unknowns);
        if (offset.count(i + 1))
          for (std::size_t k = 0; k < s->rank(i + 1); ++k)
            eq[offset[i + 1] + a * s->rank(i + 1) + k] += ds(k, b);
        if (offset.count(i))
          for (std::size_t k = 0; k < t->rank(i); ++k) eq[offset[i] + k * s->rank(i) + b] -= dt(a, k);
        rows.push_back(eq);
      }
  }
  IntegerMatrix system(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = rows[r][c];
  IntegerMatrix basis = eqmot::kernel_basis(system);
  std::vector<Integer> coeffs(basis.cols());
  std::uniform_int_distribution<int> coef(-2, 2);
  for (auto& c : coeffs) c = coef(rng);
  std::vector<Integer> x = eqmot::multiply(basis, coeffs);
  std::map<int, IntegerMatrix> comps;
  for (int deg : degrees) {
    IntegerMatrix m(t->rank(deg), s->rank(deg));
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) m(a, b) = x[offset[deg] + a * m.cols() + b];
    comps[deg] = m;
  }
  return eqmot::ChainMap(s, t, comps);
}

// Künneth: H^n(C ⊗ D) = ⊕_{p+q=n} H^p ⊗ H^q ⊕ ⊕_{p+q=n+1} Tor(H^p, H^q)
inline eqmot::FgAbelianGroup kunneth(const eqmot::CochainComplex& c, const eqmot::CochainComplex& d, int n) {
  std::vector<Integer> orders;
  auto tensor_orders = [](const Integer& a, const Integer& b) { return gcd(a, b); };  // gcd(0,b)=b
  for (int p = c.min_degree(); p <= c.max_degree(); ++p) {
    auto hp = c.cohomology(p).summand_orders();
    auto hq = d.cohomology(n - p).summand_orders();
    for (const auto& a : hp)
      for (const auto& b : hq) orders.push_back(tensor_orders(a, b));
    auto hq1 = d.cohomology(n + 1 - p).summand_orders();
    for (const auto& a : hp)
      for (const auto& b : hq1)
        if (sgn(a) != 0 && sgn(b) != 0) orders.push_back(gcd(a, b));
  }
  return eqmot::FgAbelianGroup::from_cyclic_orders(orders);
}

}  // namespace oracle
