#include "eqmot/sigmacx/sigma_complex.hpp"

#include <cstdlib>
#include <stdexcept>

namespace eqmot {

namespace {

void combinations(unsigned n, unsigned k, unsigned start, std::uint32_t mask, std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(mask);
    return;
  }
  for (unsigned e = start; e + k <= n + 1; ++e) combinations(n, k - 1, e + 1, mask | (1u << (e - 1)), out);
}

int sign_for(unsigned larger_size, unsigned pos) { return ((larger_size - 1 - pos) % 2 == 0) ? 1 : -1; }

}  // namespace

std::vector<int> subset_elements(std::uint32_t mask) {
  std::vector<int> out;
  for (int e = 1; mask; ++e, mask >>= 1)
    if (mask & 1u) out.push_back(e);
  return out;
}

SigmaLayout::SigmaLayout(SigmaSpec spec) : spec_(spec), size_(static_cast<unsigned>(std::abs(spec.n))) {
  if (size_ + 1 > max_orbit_arity) throw std::out_of_range("sigma complex too large");
  subsets_.resize(size_ + 1);
  for (unsigned j = 0; j <= size_; ++j) {
    combinations(size_, j, 1, 0, subsets_[j]);
    for (std::size_t i = 0; i < subsets_[j].size(); ++i) subset_index_[subsets_[j][i]] = i;
  }
}

int SigmaLayout::subset_size(int d) const {
  int j = spec_.n >= 0 ? -d : d;
  if (j < 0 || j > static_cast<int>(size_)) return -1;
  return j;
}

std::size_t SigmaLayout::rank(unsigned j) const { return subsets_[j].size() * orbit_count(j, spec_.orbit_type); }

std::size_t SigmaLayout::index(std::uint32_t mask, std::uint32_t orbit_bits) const {
  unsigned j = static_cast<unsigned>(__builtin_popcount(mask));
  return subset_index(mask) * orbit_count(j, spec_.orbit_type) + orbit_bits;
}

std::string SigmaLayout::label(int d, std::size_t idx) const {
  int j = subset_size(d);
  if (j < 0) throw std::out_of_range("degree outside the support");
  std::size_t per = orbit_count(j, spec_.orbit_type);
  std::uint32_t mask = subsets_[j].at(idx / per);
  std::string s = "{";
  auto el = subset_elements(mask);
  for (std::size_t i = 0; i < el.size(); ++i) s += (i ? "," : "") + std::to_string(el[i]);
  s += "}";
  return s + Orbit{orbit_arity(j, spec_.orbit_type), static_cast<std::uint32_t>(idx % per)}.label();
}

CochainComplex build_sigma_complex(const SigmaSpec& spec) {
  SigmaLayout layout(spec);
  unsigned n = layout.size();
  OrbitType type = spec.orbit_type;
  std::map<int, std::size_t> ranks;
  for (unsigned j = 0; j <= n; ++j) ranks[layout.degree(j)] = layout.rank(j);
  std::map<int, IntegerMatrix> diffs;

  if (spec.n > 0) {
    // d : degree -j -> degree -j+1, drop one element of S
    for (unsigned j = 1; j <= n; ++j) {
      unsigned a = orbit_arity(j, type);
      IntegerMatrix m(layout.rank(j - 1), layout.rank(j));
      std::size_t per = orbit_count(j, type);
      for (std::uint32_t mask : layout.subsets(j)) {
        auto el = subset_elements(mask);
        for (std::uint32_t v = 0; v < per; ++v) {
          std::size_t col = layout.index(mask, v);
          for (unsigned pos = 0; pos < j; ++pos) {
            std::uint32_t smaller = mask & ~(1u << (el[pos] - 1));
            int sign = sign_for(j, pos);
            if (a - 1 == 0) {
              m(layout.index(smaller, 0), col) += 2 * sign;
            } else {
              std::uint32_t w = drop_coordinate(v, a, pos);
              m(layout.index(smaller, orbit_index(w, a - 1)), col) += sign;
            }
          }
        }
      }
      diffs[-static_cast<int>(j)] = std::move(m);
    }
  } else if (spec.n < 0) {
    // d : degree j -> degree j+1, insert one element into S
    for (unsigned j = 0; j < n; ++j) {
      unsigned a = orbit_arity(j, type);  // source arity
      IntegerMatrix m(layout.rank(j + 1), layout.rank(j));
      std::size_t per = orbit_count(j, type);
      for (std::uint32_t mask : layout.subsets(j)) {
        for (std::uint32_t w = 0; w < per; ++w) {
          std::size_t col = layout.index(mask, w);
          for (unsigned e = 1; e <= n; ++e) {
            if (mask & (1u << (e - 1))) continue;
            std::uint32_t larger = mask | (1u << (e - 1));
            unsigned pos = static_cast<unsigned>(__builtin_popcount(mask & ((1u << (e - 1)) - 1u)));
            int sign = sign_for(j + 1, pos);
            if (a == 0) {
              m(layout.index(larger, 0), col) += sign;
              continue;
            }
            for (unsigned value = 0; value < 2; ++value) {
              std::uint32_t v = insert_coordinate(w, a, pos, value);
              m(layout.index(larger, orbit_index(v, a + 1)), col) += sign;
            }
          }
        }
      }
      diffs[static_cast<int>(j)] = std::move(m);
    }
  }
  CochainComplex c(ranks, diffs);
  c.validate();
  return c;
}

namespace {

void require_layouts(const CochainComplex& free_c, const CochainComplex& fixed_c, int n) {
  SigmaLayout lf({n, OrbitType::free}), lx({n, OrbitType::fixed});
  for (unsigned j = 0; j <= lf.size(); ++j) {
    if (free_c.rank(lf.degree(j)) != lf.rank(j) || fixed_c.rank(lx.degree(j)) != lx.rank(j))
      throw ComplexError("complex does not match the sigma layout for n = " + std::to_string(n));
  }
}

}  // namespace

ChainMap transfer_map(ComplexPtr free_complex, ComplexPtr fixed_complex, int n) {
  require_layouts(*free_complex, *fixed_complex, n);
  SigmaLayout lf({n, OrbitType::free}), lx({n, OrbitType::fixed});
  std::map<int, IntegerMatrix> comps;
  for (unsigned j = 0; j <= lf.size(); ++j) {
    IntegerMatrix m(lx.rank(j), lf.rank(j));
    unsigned a = orbit_arity(j, OrbitType::free);
    for (std::uint32_t mask : lf.subsets(j))
      for (std::uint32_t v = 0; v < orbit_count(j, OrbitType::free); ++v) {
        std::size_t col = lf.index(mask, v);
        if (j == 0) {
          m(lx.index(mask, 0), col) += 2;
        } else {
          std::uint32_t w = drop_coordinate(v, a, a - 1);
          m(lx.index(mask, orbit_index(w, a - 1)), col) += 1;
        }
      }
    comps[lf.degree(j)] = std::move(m);
  }
  return ChainMap(std::move(free_complex), std::move(fixed_complex), std::move(comps));
}

ChainMap restriction_map(ComplexPtr fixed_complex, ComplexPtr free_complex, int n) {
  require_layouts(*free_complex, *fixed_complex, n);
  SigmaLayout lf({n, OrbitType::free}), lx({n, OrbitType::fixed});
  std::map<int, IntegerMatrix> comps;
  for (unsigned j = 0; j <= lx.size(); ++j) {
    IntegerMatrix m(lf.rank(j), lx.rank(j));
    for (std::uint32_t mask : lx.subsets(j))
      for (std::uint32_t w = 0; w < orbit_count(j, OrbitType::fixed); ++w) {
        std::size_t col = lx.index(mask, w);
        if (j == 0) {
          m(lf.index(mask, 0), col) += 1;
          continue;
        }
        for (unsigned value = 0; value < 2; ++value) {
          std::uint32_t v = insert_coordinate(w, j, j, value);
          m(lf.index(mask, orbit_index(v, j + 1)), col) += 1;
        }
      }
    comps[lx.degree(j)] = std::move(m);
  }
  return ChainMap(std::move(fixed_complex), std::move(free_complex), std::move(comps));
}

ChainMap free_involution(ComplexPtr free_complex, int n) {
  SigmaLayout lf({n, OrbitType::free});
  std::map<int, IntegerMatrix> comps;
  for (unsigned j = 0; j <= lf.size(); ++j) {
    IntegerMatrix m(lf.rank(j), lf.rank(j));
    unsigned a = orbit_arity(j, OrbitType::free);
    for (std::uint32_t mask : lf.subsets(j))
      for (std::uint32_t v = 0; v < orbit_count(j, OrbitType::free); ++v)
        m(lf.index(mask, orbit_index(v ^ 1u, a)), lf.index(mask, v)) += 1;
    comps[lf.degree(j)] = std::move(m);
  }
  return ChainMap(free_complex, free_complex, std::move(comps));
}

}  // namespace eqmot
