#include "eqmot/chaincx/cochain_complex.hpp"

#include "eqmot/abgrp/smith.hpp"

#include <algorithm>
#include <set>

namespace eqmot {

namespace {

std::string shape(const IntegerMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

CochainComplex::CochainComplex(std::map<int, std::size_t> ranks, std::map<int, IntegerMatrix> differentials) {
  for (auto [deg, r] : ranks)
    if (r > 0) ranks_[deg] = r;
  for (auto& [deg, m] : differentials) {
    if (m.rows() != rank(deg + 1) || m.cols() != rank(deg))
      throw ComplexError("d^" + std::to_string(deg) + " has shape " + shape(m) + ", expected " +
                         std::to_string(rank(deg + 1)) + "x" + std::to_string(rank(deg)));
    if (!m.empty() && !m.is_zero()) differentials_.emplace(deg, std::move(m));
  }
}

CochainComplex CochainComplex::unit() { return CochainComplex({{0, 1}}, {}); }

int CochainComplex::min_degree() const { return ranks_.empty() ? 0 : ranks_.begin()->first; }
int CochainComplex::max_degree() const { return ranks_.empty() ? 0 : ranks_.rbegin()->first; }

std::size_t CochainComplex::rank(int i) const {
  auto it = ranks_.find(i);
  return it == ranks_.end() ? 0 : it->second;
}

IntegerMatrix CochainComplex::differential(int i) const {
  auto it = differentials_.find(i);
  if (it != differentials_.end()) return it->second;
  return IntegerMatrix(rank(i + 1), rank(i));
}

const IntegerMatrix* CochainComplex::stored_differential(int i) const {
  auto it = differentials_.find(i);
  return it == differentials_.end() ? nullptr : &it->second;
}

void CochainComplex::validate() const {
  for (const auto& [deg, d] : differentials_) {
    const IntegerMatrix* next = stored_differential(deg + 1);
    if (next && !((*next) * d).is_zero())
      throw ComplexError("square at degree " + std::to_string(deg) + " fails: d^" + std::to_string(deg + 1) +
                         " * d^" + std::to_string(deg) + " is not zero");
  }
}

bool CochainComplex::is_valid() const {
  try {
    validate();
    return true;
  } catch (const ComplexError&) {
    return false;
  }
}

long CochainComplex::euler_characteristic() const {
  long chi = 0;
  for (auto [deg, r] : ranks_) chi += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(r);
  return chi;
}

FgAbelianGroup CochainComplex::cohomology(int i, unsigned long m) const {
  std::size_t n = rank(i);
  if (n == 0) return {};
  IntegerMatrix d_in = differential(i - 1);
  IntegerMatrix d_out = differential(i);
  if (m != 0) {
    if (!is_prime(m)) throw std::invalid_argument("modulus " + std::to_string(m) + " is not prime");
    return FgAbelianGroup::elementary(m, n - rank_mod_prime(d_out, m) - rank_mod_prime(d_in, m));
  }
  auto diag = smith_diagonal(d_in);
  std::size_t free = n - eqmot::rank(d_out) - diag.size();
  return FgAbelianGroup::from_cyclic_orders(diag) + FgAbelianGroup::free(free);
}

HomologyBasis CochainComplex::homology_basis(int i) const {
  return eqmot::homology_basis(differential(i - 1), differential(i));
}

nlohmann::json matrix_to_json(const IntegerMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).fits_slong_p()) row.push_back(m(i, j).get_si());
      else row.push_back(m(i, j).get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

IntegerMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw DimensionError("matrix JSON has the wrong number of rows");
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw DimensionError("matrix JSON row has the wrong length");
    for (std::size_t k = 0; k < cols; ++k) {
      const auto& v = j[i][k];
      m(i, k) = v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<long>());
    }
  }
  return m;
}

nlohmann::json CochainComplex::to_json() const {
  nlohmann::json components = nlohmann::json::object();
  for (auto [deg, r] : ranks_) components[std::to_string(deg)] = r;
  nlohmann::json diffs = nlohmann::json::object();
  for (const auto& [deg, d] : differentials_) diffs[std::to_string(deg)] = matrix_to_json(d);
  return {{"components", components}, {"differentials", diffs}};
}

CochainComplex CochainComplex::from_json(const nlohmann::json& j) {
  std::map<int, std::size_t> ranks;
  for (const auto& [key, value] : j.at("components").items()) ranks[std::stoi(key)] = value.get<std::size_t>();
  auto rank_of = [&](int d) {
    auto it = ranks.find(d);
    return it == ranks.end() ? std::size_t{0} : it->second;
  };
  std::map<int, IntegerMatrix> diffs;
  if (j.contains("differentials"))
    for (const auto& [key, value] : j.at("differentials").items()) {
      int deg = std::stoi(key);
      diffs[deg] = matrix_from_json(value, rank_of(deg + 1), rank_of(deg));
    }
  return CochainComplex(ranks, diffs);
}

bool CochainComplex::operator==(const CochainComplex& other) const {
  if (ranks_ != other.ranks_) return false;
  std::set<int> degrees;
  for (const auto& kv : differentials_) degrees.insert(kv.first);
  for (const auto& kv : other.differentials_) degrees.insert(kv.first);
  for (int deg : degrees)
    if (differential(deg) != other.differential(deg)) return false;
  return true;
}

CochainComplex tensor(const CochainComplex& c, const CochainComplex& d) {
  if (c.is_zero() || d.is_zero()) return {};
  int lo = c.min_degree() + d.min_degree();
  int hi = c.max_degree() + d.max_degree();
  // offset of the C^p ⊗ D^{n-p} block inside degree n; p runs downwards
  std::map<std::pair<int, int>, std::size_t> offset;
  std::map<int, std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) {
    std::size_t total = 0;
    for (int p = c.max_degree(); p >= c.min_degree(); --p) {
      offset[{n, p}] = total;
      total += c.rank(p) * d.rank(n - p);
    }
    ranks[n] = total;
  }
  std::map<int, IntegerMatrix> diffs;
  for (int n = lo; n < hi; ++n) {
    IntegerMatrix m(ranks[n + 1], ranks[n]);
    for (int p = c.min_degree(); p <= c.max_degree(); ++p) {
      int q = n - p;
      std::size_t rc = c.rank(p), rd = d.rank(q);
      if (rc == 0 || rd == 0) continue;
      std::size_t col0 = offset[{n, p}];
      IntegerMatrix dc = c.differential(p);
      IntegerMatrix dd = d.differential(q);
      std::size_t rd_next = d.rank(q + 1);
      for (std::size_t i = 0; i < rc; ++i)
        for (std::size_t j = 0; j < rd; ++j) {
          std::size_t col = col0 + i * rd + j;
          if (c.rank(p + 1) > 0) {
            std::size_t row0 = offset[{n + 1, p + 1}];
            for (std::size_t i2 = 0; i2 < dc.rows(); ++i2)
              if (sgn(dc(i2, i)) != 0) m(row0 + i2 * rd + j, col) += dc(i2, i);
          }
          if (rd_next > 0) {
            std::size_t row0 = offset[{n + 1, p}];
            for (std::size_t j2 = 0; j2 < dd.rows(); ++j2) {
              if (sgn(dd(j2, j)) == 0) continue;
              if (p % 2 == 0) m(row0 + i * rd_next + j2, col) += dd(j2, j);
              else m(row0 + i * rd_next + j2, col) -= dd(j2, j);
            }
          }
        }
    }
    diffs[n] = std::move(m);
  }
  return CochainComplex(ranks, diffs);
}

}  // namespace eqmot
