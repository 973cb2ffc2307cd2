#include "eqmot/sigmacx/checks.hpp"

namespace eqmot {

void CheckReport::merge(const CheckReport& other) {
  checked += other.checked;
  if (!other.passed) passed = false;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

ComplexPtr get_complex(Weight0Engine* engine, int p, OrbitType type) {
  if (engine) return engine->complex(p, type);
  return std::make_shared<const CochainComplex>(build_sigma_complex({p, type}));
}

std::string first_difference(const ChainMap& lhs, const ChainMap& rhs, const SigmaLayout& layout) {
  for (auto [deg, r] : lhs.source().ranks()) {
    (void)r;
    IntegerMatrix a = lhs.component(deg), b = rhs.component(deg);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(i, j) != b(i, j))
          return "degree " + std::to_string(deg) + ", basis element " + layout.label(deg, j) + ": entry " +
                 a(i, j).get_str() + " vs " + b(i, j).get_str();
  }
  return {};
}

}  // namespace

CheckReport free_orbit_acyclicity(int p, unsigned long m, Weight0Engine* engine) {
  CheckReport report;
  report.name = "free-orbit p=" + std::to_string(p) + " m=" + std::to_string(m);
  ComplexPtr c = get_complex(engine, p, OrbitType::free);
  FgAbelianGroup coefficient = m == 0 ? FgAbelianGroup::free(1) : FgAbelianGroup::cyclic(m);
  for (int a = c->min_degree() - 1; a <= c->max_degree() + 1; ++a) {
    FgAbelianGroup h = engine ? engine->complex_cohomology(a, p, OrbitType::free, m) : c->cohomology(a, m);
    FgAbelianGroup expected = a == -p ? coefficient : FgAbelianGroup();
    ++report.checked;
    if (h != expected)
      report.fail("(a=" + std::to_string(a) + ", p=" + std::to_string(p) + ") found " + h.to_string() +
                  ", expected " + expected.to_string());
  }
  return report;
}

CheckReport transfer_restriction_check(int p, Weight0Engine* engine) {
  CheckReport report;
  report.name = "transfer-restriction p=" + std::to_string(p);
  ComplexPtr fixed = get_complex(engine, p, OrbitType::fixed);
  ComplexPtr free = get_complex(engine, p, OrbitType::free);
  ChainMap tr = transfer_map(free, fixed, p);
  ChainMap res = restriction_map(fixed, free, p);
  ChainMap tau = free_involution(free, p);
  for (const auto* f : {&tr, &res, &tau}) {
    try {
      f->validate();
    } catch (const ComplexError& e) {
      report.fail(std::string("not a chain map: ") + e.what());
      return report;
    }
  }
  ChainMap tr_res = tr.compose_after(res);
  ChainMap twice = ChainMap::scalar(fixed, 2);
  ++report.checked;
  if (!(tr_res == twice))
    report.fail("tr∘res ≠ 2·id at " + first_difference(tr_res, twice, SigmaLayout({p, OrbitType::fixed})));
  ChainMap res_tr = res.compose_after(tr);
  ChainMap one_plus_tau = ChainMap::identity(free) + tau;
  ++report.checked;
  if (!(res_tr == one_plus_tau))
    report.fail("res∘tr ≠ id + τ at " + first_difference(res_tr, one_plus_tau, SigmaLayout({p, OrbitType::free})));
  for (auto [deg, r] : fixed->ranks()) {
    (void)r;
    GroupHom h = induced_map(tr_res, deg);
    ++report.checked;
    if (!h.is_multiplication_by(2))
      report.fail("induced map on H^" + std::to_string(deg) + " = " + h.source().to_string() +
                  " is not multiplication by 2");
  }
  return report;
}

ConeTowerResult cone_tower_check(int p, Weight0Engine* engine, bool check_sequence) {
  ConeTowerResult result;
  CheckReport& report = result.report;
  report.name = "cone-tower p=" + std::to_string(p);
  if (p < 0) {
    report.fail("cone tower is defined for p >= 0");
    return result;
  }
  ComplexPtr fixed = get_complex(engine, p, OrbitType::fixed);
  ComplexPtr free = get_complex(engine, p, OrbitType::free);
  ComplexPtr next = get_complex(engine, p + 1, OrbitType::fixed);
  ChainMap tr = transfer_map(free, fixed, p);
  CochainComplex c = cone(tr);

  SigmaLayout lt({p, OrbitType::fixed}), ls({p, OrbitType::free}), ln({p + 1, OrbitType::fixed});
  std::uint32_t new_element = 1u << p;
  for (int j = 0; j <= p + 1; ++j) {
    int deg = -j;
    ++report.checked;
    if (c.rank(deg) != next->rank(deg)) {
      report.fail("rank mismatch in degree " + std::to_string(deg));
      continue;
    }
    IntegerMatrix perm(next->rank(deg), c.rank(deg));
    std::size_t t_rank = fixed->rank(deg);
    if (j <= p)
      for (std::uint32_t mask : lt.subsets(j))
        for (std::uint32_t v = 0; v < orbit_count(j, OrbitType::fixed); ++v)
          perm(ln.index(mask, v), lt.index(mask, v)) = 1;
    if (j >= 1)
      for (std::uint32_t mask : ls.subsets(j - 1))
        for (std::uint32_t v = 0; v < orbit_count(j - 1, OrbitType::free); ++v)
          perm(ln.index(mask | new_element, v), t_rank + ls.index(mask, v)) = 1;
    result.identification[deg] = std::move(perm);
  }
  if (!report.passed) return result;
  for (int j = 1; j <= p + 1; ++j) {
    int deg = -j;
    ++report.checked;
    if (result.identification[deg + 1] * c.differential(deg) != next->differential(deg) * result.identification[deg])
      report.fail("identification does not commute with the differential in degree " + std::to_string(deg));
  }
  for (int deg = -p - 2; deg <= 1; ++deg) {
    ++report.checked;
    FgAbelianGroup hc = c.cohomology(deg), hn = next->cohomology(deg);
    if (hc != hn)
      report.fail("cohomology differs in degree " + std::to_string(deg) + ": " + hc.to_string() + " vs " +
                  hn.to_string());
  }
  if (check_sequence) {
    ++report.checked;
    auto seq = check_cone_sequence(tr);
    if (!seq.exact) report.fail("long exact sequence fails at " + seq.failure);
  }
  return result;
}

}  // namespace eqmot
