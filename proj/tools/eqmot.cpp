#include "eqmot/tables/bidegree.hpp"
#include "eqmot/tables/closed_forms.hpp"
#include "eqmot/tables/render.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

using namespace eqmot;

namespace {

std::string trail_text(const Trail& t) {
  std::string out;
  for (const auto& id : t) out += (out.empty() ? "" : ",") + id;
  return out;
}

std::string degree(int a, int p) {
  std::string s = std::to_string(a);
  if (p == 0) return s;
  std::string sigma = (p == 1 ? "" : p == -1 ? "-" : std::to_string(p)) + "σ";
  if (a == 0) return sigma;
  return s + (p > 0 ? "+" : "") + sigma;
}

int run_weight0(int a, int p, const std::string& coeff_text, const std::string& format_text) {
  Coeff coeff = parse_coeff(coeff_text);
  Format format = parse_format(format_text);
  Weight0Engine engine(std::abs(p));
  GridCell c{a, p, "0", coeff, FormalGroup::from_fg(engine.group(a, p, coeff_modulus(coeff))), "computed", ""};
  auto hit = FixtureSet::standard().lookup(Family::weight0, coeff, a, p, ProfileKind::general);
  if (hit) c.citation = hit->table->id + ": " + hit->row->citation;
  if (format == Format::text) std::cout << c.group.to_string() << "\n";
  else if (format == Format::json) std::cout << cells_json({c});
  else std::cout << cells_csv({c});
  return 0;
}

int run_grid(const std::string& weight, int p_range, int a_range, const std::string& coeff_text,
             const std::string& format_text, const std::string& profile_text, const std::string& source) {
  Coeff coeff = parse_coeff(coeff_text);
  Format format = parse_format(format_text);
  if (a_range < 0) a_range = p_range + 2;
  std::vector<GridCell> cells;
  if (weight == "0") {
    if (source == "fixture") {
      cells = fixture_grid(Family::weight0, coeff, ProfileKind::general, p_range, a_range);
    } else {
      Weight0Engine engine(p_range);
      cells = weight0_grid(p_range, a_range, coeff, engine);
    }
  } else if (weight == "point") {
    cells = fixture_grid(Family::point, coeff, ProfileKind::general, p_range, a_range);
  } else {
    Weight w = parse_weight(weight);
    const FieldProfile& profile = FieldProfile::parse(profile_text);
    if (source == "fixture") {
      cells = fixture_grid(w == Weight::one ? Family::weight1 : Family::sigma, coeff, profile.kind(), p_range, a_range);
    } else {
      DerivedTables t = derive(w, profile, std::max(1, p_range));
      cells = derived_grid(t, coeff, p_range, a_range);
      for (const auto& f : t.findings) std::cerr << "finding: " << f << "\n";
    }
  }
  std::cout << render_grid(cells, format);
  return 0;
}

int run_derive(const std::string& weight, const std::string& profile_text, int n_max, const std::string& coeff_text,
               bool trace, const std::string& format_text) {
  const FieldProfile& profile = FieldProfile::parse(profile_text);
  Coeff coeff = parse_coeff(coeff_text);
  Format format = parse_format(format_text);
  DerivedTables t = derive(parse_weight(weight), profile, n_max);
  auto cells = derived_grid(t, coeff, n_max, n_max + 3);
  if (format != Format::text) {
    std::cout << (format == Format::json ? cells_json(cells) : cells_csv(cells));
  } else {
    std::cout << "weight " << weight_name(t.weight) << ", " << profile.name() << ", " << coeff_name(coeff)
              << ", n <= " << n_max << "\n";
    std::cout << render_grid(cells, Format::text);
    if (trace) {
      std::cout << "\nsteps:\n";
      for (const auto& s : t.steps) {
        std::cout << "  columns " << s.p << ", " << s.p + 1 << (s.ok ? "" : "  FAILED " + s.note) << "\n";
        for (const auto& tag : s.tags) std::cout << "    " << tag << "\n";
      }
      std::cout << "\nentries:\n";
      for (int p : t.columns())
        for (int a = t.a_min; a <= (coeff == Coeff::Z ? t.a_max : t.a_max - 1); ++a) {
          auto f = t.at(a, p, coeff);
          if (f && !f->value.is_zero())
            std::cout << "  H^{" << degree(a, p) << "} = " << f->value.to_string() << "  [" << trail_text(f->trail)
                      << "]\n";
        }
    }
    for (const auto& s : t.skipped) std::cout << "skipped: " << s << "\n";
    for (const auto& f : t.findings) std::cout << "finding: " << f << "\n";
  }
  return t.complete() ? 0 : 1;
}

int run_check_cmd(const std::string& suite, const HarnessOptions& options, bool verbose,
                  const std::string& format_text) {
  Format format = parse_format(format_text);
  auto reports = run_check(suite, options);
  std::cout << render_reports(reports, format, verbose);
  bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
  return ok ? 0 : 1;
}

int run_reduce(const Bidegree& bd, bool borel) {
  Reduction r = reduce_bidegree(bd, borel ? Space::borel : Space::field);
  std::cout << (borel ? "EC_2: " : "k: ") << bd.to_string() << " -> " << r.to_string() << "\n";
  if (!r.citation.empty()) std::cout << "  " << r.citation << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant motivic cohomology of a field: tables, derivations and checks"};
  app.require_subcommand(1);
  std::string fixtures;
  app.add_option("--fixtures", fixtures, "Fixture directory (overrides EQMOT_FIXTURES)");

  int a = 0, p = 0;
  std::string coeff = "Z", format = "text";
  auto* w0 = app.add_subcommand("weight0", "H^{a+pσ,0}(k) from the chain complex Z_top(pσ)");
  w0->add_option("--a", a, "Integer degree")->required();
  w0->add_option("--p", p, "Coefficient of σ")->required();
  w0->add_option("--coeff", coeff, "Z or 2")->capture_default_str();
  w0->add_option("--format", format, "text, json or csv")->capture_default_str();

  std::string weight = "0", profile = "qclosed", source = "computed";
  int p_range = 8, a_range = -1;
  auto* grid = app.add_subcommand("grid", "A table of groups, one row per p");
  grid->add_option("--weight", weight, "0, 1, sigma or point")->capture_default_str();
  grid->add_option("--p-range", p_range, "Rows |p| <= N")->capture_default_str();
  grid->add_option("--a-range", a_range, "Columns |a| <= M (default N + 2)");
  grid->add_option("--coeff", coeff, "Z or 2")->capture_default_str();
  grid->add_option("--format", format, "text, json or csv")->capture_default_str();
  grid->add_option("--profile", profile, "Field profile for weights 1 and sigma")->capture_default_str();
  grid->add_option("--source", source, "computed or fixture")
      ->check(CLI::IsMember({"computed", "fixture"}))
      ->capture_default_str();

  int n_max = 16;
  bool trace = false;
  auto* der = app.add_subcommand("derive", "Derive the weight 1 or sigma tables from the axioms");
  der->add_option("--weight", weight, "1 or sigma")->required();
  der->add_option("--profile", profile, "qclosed, euclidean, freal or general")->capture_default_str();
  der->add_option("--n-max", n_max, "Largest |p|")->capture_default_str();
  der->add_option("--coeff", coeff, "Z or 2")->capture_default_str();
  der->add_flag("--trace", trace, "List the axiom trail of every entry");
  der->add_option("--format", format, "text, json or csv")->capture_default_str();

  std::string suite;
  bool verbose = false;
  HarnessOptions options;
  auto* chk = app.add_subcommand("check", "Run a comparison suite");
  std::string suites = "all";
  for (const auto& s : suite_ids()) suites += ", " + s;
  chk->add_option("suite", suite, "One of: " + suites)->required();
  chk->add_flag("--verbose", verbose, "Print every compared cell");
  chk->add_option("--format", format, "text, json or csv")->capture_default_str();
  chk->add_option("--p-range", options.p_range, "Weight 0 grid |p| bound")->capture_default_str();
  chk->add_option("--a-range", options.a_range, "Weight 0 grid |a| bound")->capture_default_str();
  chk->add_option("--n-max", options.n_max, "Formal derivation bound")->capture_default_str();

  std::string dir = "export";
  ExportOptions ex;
  std::string ex_format = "json";
  auto* exp = app.add_subcommand("export", "Write every table to a directory");
  exp->add_option("--dir", dir, "Output directory")->capture_default_str();
  exp->add_option("--format", ex_format, "json, csv or text")->capture_default_str();
  exp->add_option("--p-range", ex.p_range, "Weight 0 |p| bound")->capture_default_str();
  exp->add_option("--a-range", ex.a_range, "|a| bound")->capture_default_str();
  exp->add_option("--n-max", ex.n_max, "Formal derivation bound")->capture_default_str();

  Bidegree bd;
  bool borel = false;
  auto* red = app.add_subcommand("reduce", "Reduce H^{a+pσ,b+qσ} to an implemented table");
  red->add_option("--a", bd.a)->required();
  red->add_option("--p", bd.p)->required();
  red->add_option("--b", bd.b)->required();
  red->add_option("--q", bd.q)->required();
  red->add_flag("--borel", borel, "Over EC_2 instead of the field");

  CLI11_PARSE(app, argc, argv);
  if (!fixtures.empty()) setenv("EQMOT_FIXTURES", fixtures.c_str(), 1);

  try {
    if (*w0) return run_weight0(a, p, coeff, format);
    if (*grid) return run_grid(weight, p_range, a_range, coeff, format, profile, source);
    if (*der) return run_derive(weight, profile, n_max, coeff, trace, format);
    if (*chk) return run_check_cmd(suite, options, verbose, format);
    if (*red) return run_reduce(bd, borel);
    if (*exp) {
      ex.format = parse_format(ex_format);
      Weight0Engine engine(ex.p_range);
      for (const auto& path : export_tables(dir, ex, engine)) std::cout << path.string() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "eqmot: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
