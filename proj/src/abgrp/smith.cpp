#include "eqmot/abgrp/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace eqmot {

namespace {

class Reducer {
 public:
  Reducer(const IntegerMatrix& a, bool track) : a_(a), track_(track), r_(a.rows()), c_(a.cols()) {
    if (track_) {
      u_ = IntegerMatrix::identity(r_);
      ui_ = IntegerMatrix::identity(r_);
      v_ = IntegerMatrix::identity(c_);
      vi_ = IntegerMatrix::identity(c_);
    }
  }

  void run() {
    std::size_t t = 0;
    while (t < r_ && t < c_) {
      std::size_t j = find_nonzero_column(t);
      if (j == c_) break;
      if (j != t) swap_cols(t, j);
      reduce_pivot(t);
      ++t;
    }
    rank_ = t;
    for (std::size_t i = 0; i < rank_; ++i)
      if (sgn(a_(i, i)) < 0) negate_row(i);
    fix_divisibility();
  }

  SmithForm result() && {
    SmithForm out;
    out.diagonal = std::move(a_);
    out.left = std::move(u_);
    out.right = std::move(v_);
    out.left_inverse = std::move(ui_);
    out.right_inverse = std::move(vi_);
    out.rank = rank_;
    return out;
  }

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < rank_; ++i) d.push_back(a_(i, i));
    return d;
  }

 private:
  std::size_t find_nonzero_column(std::size_t t) const {
    for (std::size_t j = t; j < c_; ++j)
      for (std::size_t i = t; i < r_; ++i)
        if (sgn(a_(i, j)) != 0) return j;
    return c_;
  }

  void reduce_pivot(std::size_t t) {
    Integer q;
    for (;;) {
      std::size_t best = r_;
      for (std::size_t i = t; i < r_; ++i) {
        if (sgn(a_(i, t)) == 0) continue;
        if (best == r_ || mpz_cmpabs(a_(i, t).get_mpz_t(), a_(best, t).get_mpz_t()) < 0) best = i;
      }
      if (best != t) swap_rows(t, best);

      bool dirty = false;
      support_.clear();
      for (std::size_t j = t; j < c_; ++j)
        if (sgn(a_(t, j)) != 0) support_.push_back(j);
      for (std::size_t i = t + 1; i < r_; ++i) {
        if (sgn(a_(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_row(i, t, -q);
        if (sgn(a_(i, t)) != 0) dirty = true;
      }
      if (dirty) continue;

      for (std::size_t j = t + 1; j < c_; ++j) {
        if (sgn(a_(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_col(j, t, -q);
        if (sgn(a_(t, j)) != 0) dirty = true;
      }
      if (!dirty) return;

      std::size_t best_col = t;
      for (std::size_t j = t + 1; j < c_; ++j) {
        if (sgn(a_(t, j)) == 0) continue;
        if (mpz_cmpabs(a_(t, j).get_mpz_t(), a_(t, best_col).get_mpz_t()) < 0) best_col = j;
      }
      swap_cols(t, best_col);
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < c_; ++j) swap(a_(i, j), a_(k, j));
    if (!track_) return;
    for (std::size_t j = 0; j < r_; ++j) swap(u_(i, j), u_(k, j));
    for (std::size_t j = 0; j < r_; ++j) swap(ui_(j, i), ui_(j, k));
  }

  void swap_cols(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < r_; ++j) swap(a_(j, i), a_(j, k));
    if (!track_) return;
    for (std::size_t j = 0; j < c_; ++j) swap(v_(j, i), v_(j, k));
    for (std::size_t j = 0; j < c_; ++j) swap(vi_(i, j), vi_(k, j));
  }

  // row dst += q * row src, where support_ lists the nonzero columns of row src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j : support_) mpz_addmul(a_(dst, j).get_mpz_t(), a_(src, j).get_mpz_t(), q.get_mpz_t());
    if (!track_) return;
    for (std::size_t j = 0; j < r_; ++j)
      if (sgn(u_(src, j)) != 0) mpz_addmul(u_(dst, j).get_mpz_t(), u_(src, j).get_mpz_t(), q.get_mpz_t());
    for (std::size_t j = 0; j < r_; ++j)
      if (sgn(ui_(j, dst)) != 0) mpz_submul(ui_(j, src).get_mpz_t(), ui_(j, dst).get_mpz_t(), q.get_mpz_t());
  }

  // col dst += q * col src
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < r_; ++i)
      if (sgn(a_(i, src)) != 0) mpz_addmul(a_(i, dst).get_mpz_t(), a_(i, src).get_mpz_t(), q.get_mpz_t());
    if (!track_) return;
    for (std::size_t i = 0; i < c_; ++i)
      if (sgn(v_(i, src)) != 0) mpz_addmul(v_(i, dst).get_mpz_t(), v_(i, src).get_mpz_t(), q.get_mpz_t());
    for (std::size_t j = 0; j < c_; ++j)
      if (sgn(vi_(dst, j)) != 0) mpz_submul(vi_(src, j).get_mpz_t(), vi_(dst, j).get_mpz_t(), q.get_mpz_t());
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < c_; ++j) a_(i, j) = -a_(i, j);
    if (!track_) return;
    for (std::size_t j = 0; j < r_; ++j) u_(i, j) = -u_(i, j);
    for (std::size_t j = 0; j < r_; ++j) ui_(j, i) = -ui_(j, i);
  }

  // diag(a, b) -> diag(gcd, lcm) on positions i < k
  void merge_pair(std::size_t i, std::size_t k) {
    Integer a = a_(i, i), b = a_(k, k), g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer ag = a / g, bg = b / g;
    a_(i, i) = g;
    a_(k, k) = a * bg;
    if (!track_) return;
    // rows: R = [[s, t], [-b/g, a/g]], R^{-1} = [[a/g, -t], [b/g, s]]
    for (std::size_t j = 0; j < r_; ++j) {
      Integer x = u_(i, j), y = u_(k, j);
      u_(i, j) = s * x + t * y;
      u_(k, j) = ag * y - bg * x;
    }
    for (std::size_t j = 0; j < r_; ++j) {
      Integer x = ui_(j, i), y = ui_(j, k);
      ui_(j, i) = ag * x + bg * y;
      ui_(j, k) = s * y - t * x;
    }
    // columns: C = [[1, -t b/g], [1, s a/g]], C^{-1} = [[s a/g, t b/g], [-1, 1]]
    for (std::size_t j = 0; j < c_; ++j) {
      Integer x = v_(j, i), y = v_(j, k);
      v_(j, i) = x + y;
      v_(j, k) = s * ag * y - t * bg * x;
    }
    for (std::size_t j = 0; j < c_; ++j) {
      Integer x = vi_(i, j), y = vi_(k, j);
      vi_(i, j) = s * ag * x + t * bg * y;
      vi_(k, j) = y - x;
    }
  }

  void fix_divisibility() {
    for (std::size_t i = 0; i < rank_; ++i) {
      if (a_(i, i) == 1) continue;
      for (std::size_t k = i + 1; k < rank_; ++k)
        if (!mpz_divisible_p(a_(k, k).get_mpz_t(), a_(i, i).get_mpz_t())) merge_pair(i, k);
    }
  }

  IntegerMatrix a_, u_, ui_, v_, vi_;
  std::vector<std::size_t> support_;
  bool track_;
  std::size_t r_, c_;
  std::size_t rank_ = 0;
};

}  // namespace

std::vector<Integer> SmithForm::nonzero_diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(diagonal(i, i));
  return d;
}

SmithForm smith_normal_form(const IntegerMatrix& a) {
  Reducer r(a, true);
  r.run();
  return std::move(r).result();
}

std::vector<Integer> smith_diagonal(const IntegerMatrix& a) {
  Reducer r(a, false);
  r.run();
  return r.diagonal();
}

std::size_t rank(const IntegerMatrix& a) { return rank_mod_prime(a, 0); }

std::size_t rank_mod_prime(const IntegerMatrix& a, unsigned long p) {
  if (p == 0) return smith_diagonal(a).size();
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  std::size_t r = a.rows(), c = a.cols();
  std::vector<std::uint64_t> m(r * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m[i * c + j] = mpz_fdiv_ui(a(i, j).get_mpz_t(), p);
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t rk = 0;
  for (std::size_t j = 0; j < c && rk < r; ++j) {
    std::size_t piv = rk;
    while (piv < r && m[piv * c + j] == 0) ++piv;
    if (piv == r) continue;
    if (piv != rk)
      for (std::size_t k = 0; k < c; ++k) std::swap(m[piv * c + k], m[rk * c + k]);
    std::uint64_t inv = inverse(m[rk * c + j]);
    for (std::size_t k = j; k < c; ++k) m[rk * c + k] = m[rk * c + k] * inv % p;
    for (std::size_t i = rk + 1; i < r; ++i) {
      std::uint64_t f = m[i * c + j];
      if (f == 0) continue;
      for (std::size_t k = j; k < c; ++k) m[i * c + k] = (m[i * c + k] + (p - f) * m[rk * c + k]) % p;
    }
    ++rk;
  }
  return rk;
}

bool is_prime(unsigned long m) {
  if (m < 2 || m >= (1ul << 32)) return false;
  for (unsigned long d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

void canonical_cyclic_decomposition(const std::vector<Integer>& orders, std::vector<Integer>& torsion,
                                    std::size_t& free_rank) {
  free_rank = 0;
  std::vector<Integer> finite;
  for (const auto& o : orders) {
    if (sgn(o) == 0) {
      ++free_rank;
    } else if (abs(o) != 1) {
      finite.push_back(abs(o));
    }
  }
  std::sort(finite.begin(), finite.end());
  for (std::size_t i = 0; i < finite.size(); ++i)
    for (std::size_t k = i + 1; k < finite.size(); ++k) {
      if (mpz_divisible_p(finite[k].get_mpz_t(), finite[i].get_mpz_t())) continue;
      Integer g = gcd(finite[i], finite[k]);
      finite[k] = finite[i] / g * finite[k];
      finite[i] = g;
    }
  torsion.clear();
  for (auto& f : finite)
    if (f != 1) torsion.push_back(f);
}

}  // namespace eqmot
