#include "eqmot/abgrp/lattice.hpp"

#include "eqmot/abgrp/smith.hpp"

namespace eqmot {

namespace {

void reduce_modulo(Integer& x, const Integer& order) {
  if (sgn(order) != 0) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), order.get_mpz_t());
}

}  // namespace

std::vector<Integer> HomologyBasis::coordinates(const std::vector<Integer>& cycle) const {
  std::vector<Integer> c = multiply(coordinate_map, cycle);
  for (std::size_t i = 0; i < c.size(); ++i) reduce_modulo(c[i], group.summand_order(i));
  return c;
}

HomologyBasis homology_basis(const IntegerMatrix& d_in, const IntegerMatrix& d_out) {
  if (d_out.cols() != d_in.rows()) throw DimensionError("differentials do not compose");
  std::size_t n = d_in.rows();
  SmithForm out = smith_normal_form(d_out);
  std::size_t r1 = out.rank;
  IntegerMatrix cycles = out.right.column_range(r1, n);
  IntegerMatrix to_cycle_coords = out.right_inverse.row_range(r1, n);
  IntegerMatrix boundaries = to_cycle_coords * d_in;
  // boundaries must lie in the cycle lattice: the dropped coordinates vanish
  if (!(out.right_inverse.row_range(0, r1) * d_in).is_zero()) throw AlgebraError("d_out * d_in is not zero");

  SmithForm rel = smith_normal_form(boundaries);
  std::size_t k = n - r1;
  std::vector<std::size_t> kept;
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < k; ++i) {
    if (i < rel.rank) {
      if (rel.diagonal(i, i) == 1) continue;
      orders.push_back(rel.diagonal(i, i));
    } else {
      orders.push_back(0);
    }
    kept.push_back(i);
  }
  HomologyBasis hb;
  hb.group = FgAbelianGroup::from_cyclic_orders(orders);
  IntegerMatrix chosen_inv(k, kept.size());
  IntegerMatrix chosen_rows(kept.size(), k);
  for (std::size_t s = 0; s < kept.size(); ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      chosen_inv(i, s) = rel.left_inverse(i, kept[s]);
      chosen_rows(s, i) = rel.left(kept[s], i);
    }
  }
  hb.generators = cycles * chosen_inv;
  hb.coordinate_map = chosen_rows * to_cycle_coords;
  return hb;
}

IntegerMatrix kernel_basis(const IntegerMatrix& a) {
  SmithForm s = smith_normal_form(a);
  return s.right.column_range(s.rank, a.cols());
}

bool lattice_contains(const IntegerMatrix& big, const IntegerMatrix& small) {
  if (big.rows() != small.rows()) throw DimensionError("lattices live in different ambient spaces");
  SmithForm s = smith_normal_form(big);
  IntegerMatrix z = s.left * small;
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) {
      if (i < s.rank) {
        if (!mpz_divisible_p(z(i, j).get_mpz_t(), s.diagonal(i, i).get_mpz_t())) return false;
      } else if (sgn(z(i, j)) != 0) {
        return false;
      }
    }
  return true;
}

FgAbelianGroup lattice_quotient(const IntegerMatrix& big, const IntegerMatrix& small) {
  if (big.rows() != small.rows()) throw DimensionError("lattices live in different ambient spaces");
  SmithForm s = smith_normal_form(big);
  IntegerMatrix z = s.left * small;
  IntegerMatrix coords(s.rank, small.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) {
      if (i < s.rank) {
        if (!mpz_divisible_p(z(i, j).get_mpz_t(), s.diagonal(i, i).get_mpz_t()))
          throw AlgebraError("lattice_quotient: sublattice not contained");
        mpz_divexact(coords(i, j).get_mpz_t(), z(i, j).get_mpz_t(), s.diagonal(i, i).get_mpz_t());
      } else if (sgn(z(i, j)) != 0) {
        throw AlgebraError("lattice_quotient: sublattice not contained");
      }
    }
  return cokernel(coords);
}

IntegerMatrix relation_matrix(const FgAbelianGroup& g) {
  std::size_t s = g.summand_count();
  IntegerMatrix d(s, s);
  for (std::size_t i = 0; i < s; ++i) d(i, i) = g.summand_order(i);
  return d;
}

GroupHom::GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntegerMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.summand_count() || matrix_.cols() != source_.summand_count())
    throw DimensionError("homomorphism matrix shape does not match the groups");
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    Integer d = target_.summand_order(i);
    for (std::size_t j = 0; j < matrix_.cols(); ++j) reduce_modulo(matrix_(i, j), d);
  }
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    Integer e = source_.summand_order(j);
    if (sgn(e) == 0) continue;
    for (std::size_t i = 0; i < matrix_.rows(); ++i) {
      Integer d = target_.summand_order(i);
      Integer v = e * matrix_(i, j);
      bool ok = sgn(d) == 0 ? sgn(v) == 0 : mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
      if (!ok) throw AlgebraError("matrix does not define a homomorphism on torsion summands");
    }
  }
}

GroupHom GroupHom::identity(const FgAbelianGroup& g) {
  return GroupHom(g, g, IntegerMatrix::identity(g.summand_count()));
}

GroupHom GroupHom::zero(const FgAbelianGroup& source, const FgAbelianGroup& target) {
  return GroupHom(source, target, IntegerMatrix(target.summand_count(), source.summand_count()));
}

IntegerMatrix GroupHom::kernel_generators() const {
  IntegerMatrix stacked = matrix_.hconcat(-relation_matrix(target_));
  return kernel_basis(stacked).row_range(0, source_.summand_count());
}

IntegerMatrix GroupHom::image_generators() const { return matrix_.hconcat(relation_matrix(target_)); }

FgAbelianGroup GroupHom::kernel() const {
  return lattice_quotient(kernel_generators(), relation_matrix(source_));
}

FgAbelianGroup GroupHom::image() const {
  return lattice_quotient(image_generators(), relation_matrix(target_));
}

FgAbelianGroup GroupHom::cokernel() const { return eqmot::cokernel(image_generators()); }

bool GroupHom::is_zero() const { return matrix_.is_zero(); }

bool GroupHom::is_multiplication_by(const Integer& n) const {
  if (source_ != target_) return false;
  GroupHom scalar(source_, target_, IntegerMatrix::identity(source_.summand_count()).scaled(n));
  return scalar.matrix() == matrix_;
}

GroupHom GroupHom::compose_after(const GroupHom& first) const {
  if (first.target_ != source_) throw DimensionError("composition of non-composable homomorphisms");
  return GroupHom(first.source_, target_, matrix_ * first.matrix_);
}

bool is_exact_at(const GroupHom& in, const GroupHom& out) {
  if (in.target() != out.source()) throw DimensionError("exactness check on non-composable maps");
  if (!out.compose_after(in).is_zero()) return false;
  IntegerMatrix image_lattice = in.matrix().hconcat(relation_matrix(in.target()));
  return lattice_contains(image_lattice, out.kernel_generators());
}

}  // namespace eqmot
