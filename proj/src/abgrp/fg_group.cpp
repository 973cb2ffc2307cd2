#include "eqmot/abgrp/fg_group.hpp"

#include "eqmot/abgrp/smith.hpp"

#include <regex>
#include <sstream>

namespace eqmot {

FgAbelianGroup::FgAbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors)
    : free_rank_(free_rank), torsion_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw std::invalid_argument("invariant factor below 2");
    if (i && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      throw std::invalid_argument("invariant factors do not form a divisibility chain");
  }
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;
  canonical_cyclic_decomposition(orders, torsion, free_rank);
  return FgAbelianGroup(free_rank, std::move(torsion));
}

FgAbelianGroup FgAbelianGroup::elementary(const Integer& p, std::size_t count) {
  return from_cyclic_orders(std::vector<Integer>(count, p));
}

FgAbelianGroup FgAbelianGroup::parse(const std::string& text) {
  static const std::regex separator(R"(\s*(⊕|\+)\s*)");
  static const std::regex free_term(R"(Z(?:\^(\d+))?)");
  static const std::regex cyclic_term(R"(Z/(\d+))");
  static const std::regex cyclic_power(R"(\(Z/(\d+)\)\^(\d+))");
  std::string trimmed = std::regex_replace(text, std::regex(R"(^\s+|\s+$)"), "");
  if (trimmed == "0") return {};
  std::vector<Integer> orders;
  std::sregex_token_iterator it(trimmed.begin(), trimmed.end(), separator, -1), end;
  for (; it != end; ++it) {
    std::string term = *it;
    std::smatch m;
    if (std::regex_match(term, m, free_term)) {
      std::size_t r = m[1].matched ? std::stoul(m[1]) : 1;
      orders.insert(orders.end(), r, Integer(0));
    } else if (std::regex_match(term, m, cyclic_term)) {
      orders.emplace_back(m[1].str());
    } else if (std::regex_match(term, m, cyclic_power)) {
      orders.insert(orders.end(), std::stoul(m[2]), Integer(m[1].str()));
    } else {
      throw std::invalid_argument("cannot parse group summand '" + term + "' in '" + text + "'");
    }
  }
  return from_cyclic_orders(orders);
}

Integer FgAbelianGroup::summand_order(std::size_t i) const {
  if (i < torsion_.size()) return torsion_[i];
  if (i < summand_count()) return 0;
  throw std::out_of_range("summand index out of range");
}

std::vector<Integer> FgAbelianGroup::summand_orders() const {
  std::vector<Integer> out = torsion_;
  out.insert(out.end(), free_rank_, Integer(0));
  return out;
}

FgAbelianGroup FgAbelianGroup::operator+(const FgAbelianGroup& other) const {
  std::vector<Integer> orders = summand_orders();
  auto more = other.summand_orders();
  orders.insert(orders.end(), more.begin(), more.end());
  return from_cyclic_orders(orders);
}

std::string FgAbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.push_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (std::size_t i = 0; i < torsion_.size();) {
    std::size_t k = i;
    while (k < torsion_.size() && torsion_[k] == torsion_[i]) ++k;
    std::string base = "Z/" + torsion_[i].get_str();
    parts.push_back(k - i == 1 ? base : "(" + base + ")^" + std::to_string(k - i));
    i = k;
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ⊕ " : "") + parts[i];
  return out;
}

namespace {

void check_window(const IntegerMatrix& d_in, const IntegerMatrix& d_out) {
  if (d_out.cols() != d_in.rows())
    throw DimensionError("differentials do not compose: d_in has " + std::to_string(d_in.rows()) +
                         " rows, d_out has " + std::to_string(d_out.cols()) + " columns");
}

}  // namespace

FgAbelianGroup cohomology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out) {
  check_window(d_in, d_out);
  if (!(d_out * d_in).is_zero()) throw AlgebraError("d_out * d_in is not zero");
  auto diag_in = smith_diagonal(d_in);
  std::size_t rank_out = rank(d_out);
  std::size_t free = d_in.rows() - rank_out - diag_in.size();
  return FgAbelianGroup::from_cyclic_orders(diag_in) + FgAbelianGroup::free(free);
}

FgAbelianGroup mod_m_cohomology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out, unsigned long m) {
  if (!is_prime(m)) throw std::invalid_argument("modulus " + std::to_string(m) + " is not prime");
  check_window(d_in, d_out);
  IntegerMatrix prod = d_out * d_in;
  for (const auto& x : prod.entries())
    if (!mpz_divisible_ui_p(x.get_mpz_t(), m)) throw AlgebraError("d_out * d_in is not zero modulo m");
  std::size_t dim = d_in.rows() - rank_mod_prime(d_out, m) - rank_mod_prime(d_in, m);
  return FgAbelianGroup::elementary(m, dim);
}

FgAbelianGroup cokernel(const IntegerMatrix& a) {
  auto diag = smith_diagonal(a);
  return FgAbelianGroup::from_cyclic_orders(diag) + FgAbelianGroup::free(a.rows() - diag.size());
}

FgAbelianGroup tensor_Z2_group(const FgAbelianGroup& g) {
  std::size_t count = g.free_rank();
  for (const auto& d : g.invariant_factors())
    if (mpz_even_p(d.get_mpz_t())) ++count;
  return FgAbelianGroup::elementary(2, count);
}

FgAbelianGroup two_torsion_group(const FgAbelianGroup& g) {
  std::size_t count = 0;
  for (const auto& d : g.invariant_factors())
    if (mpz_even_p(d.get_mpz_t())) ++count;
  return FgAbelianGroup::elementary(2, count);
}

}  // namespace eqmot
