#include "eqmot/tables/bidegree.hpp"
#include "eqmot/tables/closed_forms.hpp"
#include "eqmot/tables/render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace eqmot;

namespace {

Weight0Engine& engine() {
  static Weight0Engine e(8);
  return e;
}

std::string grid_json(const std::string& weight, int p_range, int a_range, const std::string& coeff_text,
                      const std::string& profile_text, const std::string& source) {
  Coeff coeff = parse_coeff(coeff_text);
  if (a_range < 0) a_range = p_range + 2;
  if (weight == "0") {
    if (source == "fixture") return cells_json(fixture_grid(Family::weight0, coeff, ProfileKind::general, p_range, a_range));
    Weight0Engine local(p_range);
    return cells_json(weight0_grid(p_range, a_range, coeff, local));
  }
  if (weight == "point") return cells_json(fixture_grid(Family::point, coeff, ProfileKind::general, p_range, a_range));
  Weight w = parse_weight(weight);
  const FieldProfile& profile = FieldProfile::parse(profile_text);
  if (source == "fixture")
    return cells_json(fixture_grid(w == Weight::one ? Family::weight1 : Family::sigma, coeff, profile.kind(), p_range,
                                   a_range));
  return cells_json(derived_grid(derive(w, profile, std::max(1, p_range)), coeff, p_range, a_range));
}

py::dict derive_dict(const std::string& weight, const std::string& profile_text, int n_max, const std::string& coeff_text) {
  const FieldProfile& profile = FieldProfile::parse(profile_text);
  Coeff coeff = parse_coeff(coeff_text);
  DerivedTables t = derive(parse_weight(weight), profile, n_max);
  py::dict cells;
  for (int p : t.columns())
    for (int a = t.a_min; a <= (coeff == Coeff::Z ? t.a_max : t.a_max - 1); ++a) {
      auto f = t.at(a, p, coeff);
      if (!f) continue;
      std::vector<std::string> trail(f->trail.begin(), f->trail.end());
      cells[py::make_tuple(a, p)] = py::make_tuple(f->value.to_string(), trail);
    }
  py::dict out;
  out["weight"] = weight_name(t.weight);
  out["profile"] = profile.name();
  out["coeff"] = coeff_name(coeff);
  out["n_max"] = t.n_max;
  out["complete"] = t.complete();
  out["findings"] = t.findings;
  out["skipped"] = t.skipped;
  out["cells"] = cells;
  return out;
}

py::dict reduction_dict(int a, int p, int b, int q, bool borel) {
  Reduction r = reduce_bidegree({a, p, b, q}, borel ? Space::borel : Space::field);
  py::dict out;
  out["kind"] = r.kind == ReductionKind::zero ? "zero" : r.kind == ReductionKind::redirect ? "redirect" : "not_reducible";
  if (r.kind == ReductionKind::redirect) {
    out["table"] = target_name(r.table);
    out["a"] = r.a;
    out["p"] = r.p;
  }
  out["rule"] = r.rule;
  out["citation"] = r.citation;
  return out;
}

std::string check_json(const std::string& suite, int p_range, int a_range, int n_max, bool verbose) {
  HarnessOptions o;
  o.p_range = p_range;
  o.a_range = a_range;
  o.n_max = n_max;
  return render_reports(run_check(suite, o), Format::json, verbose);
}

}  // namespace

PYBIND11_MODULE(_eqmot, m) {
  m.doc() = "Equivariant motivic cohomology of a field: weight 0 complexes, formal tables and checks";
  py::register_exception<TableRangeError>(m, "TableRangeError", PyExc_ValueError);
  py::register_exception<FixtureError>(m, "FixtureError", PyExc_RuntimeError);
  py::register_exception<FormalError>(m, "FormalError", PyExc_ValueError);

  m.def("weight0", [](int a, int p, const std::string& coeff) {
    if (std::abs(p) <= engine().max_abs_p()) return engine().group(a, p, coeff_modulus(parse_coeff(coeff))).to_string();
    return weight0(a, p, coeff_modulus(parse_coeff(coeff))).to_string();
  }, py::arg("a"), py::arg("p"), py::arg("coeff") = "Z");
  m.def("bredon_point", [](int a, int p, const std::string& coeff) {
    return bredon_point_closed_form(a, p, parse_coeff(coeff)).to_string();
  }, py::arg("a"), py::arg("p"), py::arg("coeff") = "Z");
  m.def("weight0_closed_form", [](int a, int p, const std::string& coeff) {
    return weight0_closed_form(a, p, parse_coeff(coeff)).to_string();
  }, py::arg("a"), py::arg("p"), py::arg("coeff") = "Z");
  m.def("weight1_closed_form", [](int a, int p, const std::string& coeff, const std::string& profile) {
    return weight1_closed_form(a, p, parse_coeff(coeff), FieldProfile::parse(profile)).to_string();
  }, py::arg("a"), py::arg("p"), py::arg("coeff") = "Z", py::arg("profile") = "qclosed");
  m.def("weight_sigma_closed_form", [](int a, int p, const std::string& coeff, const std::string& profile) {
    return weight_sigma_closed_form(a, p, parse_coeff(coeff), FieldProfile::parse(profile)).to_string();
  }, py::arg("a"), py::arg("p"), py::arg("coeff") = "Z", py::arg("profile") = "qclosed");
  m.def("normalize", [](const std::string& group, const std::string& profile) {
    return normalize(FormalGroup::parse(group), FieldProfile::parse(profile)).to_string();
  }, py::arg("group"), py::arg("profile"));
  m.def("derive", &derive_dict, py::arg("weight"), py::arg("profile") = "qclosed", py::arg("n_max") = 16,
        py::arg("coeff") = "Z");
  m.def("reduce_bidegree", &reduction_dict, py::arg("a"), py::arg("p"), py::arg("b"), py::arg("q"),
        py::arg("borel") = false);
  m.def("grid_json", &grid_json, py::arg("weight") = "0", py::arg("p_range") = 8, py::arg("a_range") = -1,
        py::arg("coeff") = "Z", py::arg("profile") = "qclosed", py::arg("source") = "computed");
  m.def("check_json", &check_json, py::arg("suite"), py::arg("p_range") = 8, py::arg("a_range") = 12,
        py::arg("n_max") = 16, py::arg("verbose") = false);
  m.def("suite_ids", &suite_ids);
  m.def("fixture_dir", [] { return FixtureSet::default_dir().string(); });
}
