#include "eqmot/chaincx/chain_map.hpp"

#include <set>

namespace eqmot {

namespace {

std::set<int> joint_degrees(const CochainComplex& a, const CochainComplex& b) {
  std::set<int> out;
  for (const auto& kv : a.ranks()) out.insert(kv.first);
  for (const auto& kv : b.ranks()) out.insert(kv.first);
  return out;
}

}  // namespace

ChainMap::ChainMap(ComplexPtr source, ComplexPtr target, std::map<int, IntegerMatrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
  for (auto& [deg, m] : components) {
    if (m.rows() != target_->rank(deg) || m.cols() != source_->rank(deg))
      throw ComplexError("chain map component in degree " + std::to_string(deg) + " has shape " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                         std::to_string(target_->rank(deg)) + "x" + std::to_string(source_->rank(deg)));
    if (!m.empty()) components_.emplace(deg, std::move(m));
  }
}

ChainMap ChainMap::identity(ComplexPtr c) { return scalar(std::move(c), 1); }

ChainMap ChainMap::zero(ComplexPtr source, ComplexPtr target) { return ChainMap(source, target, {}); }

ChainMap ChainMap::scalar(ComplexPtr c, const Integer& n) {
  std::map<int, IntegerMatrix> comps;
  for (auto [deg, r] : c->ranks()) comps[deg] = IntegerMatrix::identity(r).scaled(n);
  return ChainMap(c, c, std::move(comps));
}

IntegerMatrix ChainMap::component(int i) const {
  auto it = components_.find(i);
  if (it != components_.end()) return it->second;
  return IntegerMatrix(target_->rank(i), source_->rank(i));
}

void ChainMap::validate() const {
  std::set<int> degrees = joint_degrees(*source_, *target_);
  for (int deg : degrees) {
    IntegerMatrix lhs = component(deg + 1) * source_->differential(deg);
    IntegerMatrix rhs = target_->differential(deg) * component(deg);
    if (lhs != rhs)
      throw ComplexError("chain map square at degree " + std::to_string(deg) + " does not commute");
  }
}

bool ChainMap::is_valid() const {
  try {
    validate();
    return true;
  } catch (const ComplexError&) {
    return false;
  }
}

ChainMap ChainMap::compose_after(const ChainMap& first) const {
  if (first.target_ != source_ && !(first.target() == source())) throw ComplexError("composition of non-composable chain maps");
  std::map<int, IntegerMatrix> comps;
  for (auto [deg, r] : first.source().ranks()) {
    (void)r;
    comps[deg] = component(deg) * first.component(deg);
  }
  return ChainMap(first.source_, target_, std::move(comps));
}

ChainMap ChainMap::operator+(const ChainMap& other) const {
  std::map<int, IntegerMatrix> comps;
  for (auto [deg, r] : source_->ranks()) {
    (void)r;
    comps[deg] = component(deg) + other.component(deg);
  }
  return ChainMap(source_, target_, std::move(comps));
}

ChainMap ChainMap::scaled(const Integer& n) const {
  std::map<int, IntegerMatrix> comps;
  for (const auto& [deg, m] : components_) comps[deg] = m.scaled(n);
  return ChainMap(source_, target_, std::move(comps));
}

bool ChainMap::operator==(const ChainMap& other) const {
  for (int deg : joint_degrees(*source_, *target_))
    if (component(deg) != other.component(deg)) return false;
  return true;
}

CochainComplex cone(const ChainMap& f) {
  const CochainComplex& s = f.source();
  const CochainComplex& t = f.target();
  std::set<int> degrees;
  for (const auto& kv : t.ranks()) degrees.insert(kv.first);
  for (const auto& kv : s.ranks()) degrees.insert(kv.first - 1);
  std::map<int, std::size_t> ranks;
  for (int i : degrees) ranks[i] = t.rank(i) + s.rank(i + 1);
  std::map<int, IntegerMatrix> diffs;
  for (int i : degrees) {
    std::size_t rows = t.rank(i + 1) + s.rank(i + 2);
    if (rows == 0) continue;
    IntegerMatrix m(rows, ranks[i]);
    m.set_block(0, 0, t.differential(i));
    m.set_block(0, t.rank(i), f.component(i + 1));
    m.set_block(t.rank(i + 1), t.rank(i), s.differential(i + 1), -1);
    diffs[i] = std::move(m);
  }
  return CochainComplex(ranks, diffs);
}

ChainMap cone_inclusion(const ChainMap& f, ComplexPtr cone_complex) {
  std::map<int, IntegerMatrix> comps;
  for (auto [deg, r] : f.target().ranks()) {
    IntegerMatrix m(cone_complex->rank(deg), r);
    m.set_block(0, 0, IntegerMatrix::identity(r));
    comps[deg] = std::move(m);
  }
  return ChainMap(f.target_ptr(), std::move(cone_complex), std::move(comps));
}

IntegerMatrix cone_projection(const ChainMap& f, int i) {
  std::size_t tr = f.target().rank(i), sr = f.source().rank(i + 1);
  IntegerMatrix m(sr, tr + sr);
  m.set_block(0, tr, IntegerMatrix::identity(sr));
  return m;
}

CochainComplex mod_m_model(const CochainComplex& c, unsigned long m) {
  auto ptr = std::make_shared<const CochainComplex>(c);
  return cone(ChainMap::scalar(ptr, m));
}

ChainMap mod_m_model(const ChainMap& f, unsigned long m) {
  auto src = std::make_shared<const CochainComplex>(mod_m_model(f.source(), m));
  auto tgt = std::make_shared<const CochainComplex>(mod_m_model(f.target(), m));
  std::map<int, IntegerMatrix> comps;
  for (auto [deg, r] : src->ranks()) {
    (void)r;
    IntegerMatrix block(tgt->rank(deg), src->rank(deg));
    block.set_block(0, 0, f.component(deg));
    block.set_block(f.target().rank(deg), f.source().rank(deg), f.component(deg + 1));
    comps[deg] = std::move(block);
  }
  return ChainMap(src, tgt, std::move(comps));
}

GroupHom induced_hom(const HomologyBasis& source, const HomologyBasis& target, const IntegerMatrix& chain_matrix) {
  IntegerMatrix images = chain_matrix * source.generators;
  IntegerMatrix m(target.group.summand_count(), source.group.summand_count());
  for (std::size_t j = 0; j < images.cols(); ++j) {
    auto coords = target.coordinates(images.column_vector(j));
    for (std::size_t i = 0; i < coords.size(); ++i) m(i, j) = coords[i];
  }
  return GroupHom(source.group, target.group, std::move(m));
}

GroupHom induced_map(const ChainMap& f, int i, unsigned long m) {
  if (m != 0) return induced_map(mod_m_model(f, m), i, 0);
  return induced_hom(f.source().homology_basis(i), f.target().homology_basis(i), f.component(i));
}

ConeSequenceReport check_cone_sequence(const ChainMap& f) {
  auto cone_ptr = std::make_shared<const CochainComplex>(cone(f));
  ChainMap incl = cone_inclusion(f, cone_ptr);
  const CochainComplex& s = f.source();
  const CochainComplex& t = f.target();
  int lo = std::min(s.min_degree(), t.min_degree()) - 2;
  int hi = std::max(s.max_degree(), t.max_degree()) + 1;
  ConeSequenceReport report;
  auto fail = [&](const std::string& where) {
    report.exact = false;
    report.failure = where;
    return report;
  };
  for (int i = lo; i <= hi; ++i) {
    HomologyBasis hs = s.homology_basis(i), ht = t.homology_basis(i), hc = cone_ptr->homology_basis(i);
    HomologyBasis hs_next = s.homology_basis(i + 1), ht_next = t.homology_basis(i + 1);
    GroupHom a = induced_hom(hs, ht, f.component(i));
    GroupHom b = induced_hom(ht, hc, incl.component(i));
    GroupHom c = induced_hom(hc, hs_next, cone_projection(f, i));
    GroupHom a_next = induced_hom(hs_next, ht_next, f.component(i + 1));
    if (!is_exact_at(a, b)) return fail("H^" + std::to_string(i) + " of the target");
    if (!is_exact_at(b, c)) return fail("H^" + std::to_string(i) + " of the cone");
    if (!is_exact_at(c, a_next)) return fail("H^" + std::to_string(i + 1) + " of the source");
  }
  return report;
}

}  // namespace eqmot
