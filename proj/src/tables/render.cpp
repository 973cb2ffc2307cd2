#include "eqmot/tables/render.hpp"

#include "eqmot/tables/closed_forms.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace eqmot {

using nlohmann::ordered_json;

Format parse_format(const std::string& text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + text + "', expected text, json or csv");
}

namespace {

ordered_json group_object(const FormalGroup& g) {
  ordered_json out;
  std::size_t rank = 0;
  ordered_json torsion = ordered_json::array();
  ordered_json symbolic = ordered_json::array();
  for (const auto& a : g.atoms()) {
    if (a.kind == AtomKind::Z) ++rank;
    else if (a.kind == AtomKind::Z2) torsion.push_back(2);
    else symbolic.push_back(a.to_string());
  }
  out["rank"] = rank;
  out["torsion"] = torsion;
  out["symbolic"] = symbolic;
  out["text"] = g.to_string();
  return out;
}

ordered_json cell_object(const GridCell& c) {
  ordered_json out;
  out["a"] = c.a;
  out["p"] = c.p;
  out["weight"] = c.weight;
  out["coeff"] = coeff_name(c.coeff);
  out["group"] = group_object(c.group);
  out["source"] = c.source;
  out["citation"] = c.citation;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// display width in code points
std::size_t width(const std::string& s) {
  return std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; });
}

std::string pad(const std::string& s, std::size_t w) { return std::string(w - std::min(w, width(s)), ' ') + s; }

std::string trail_text(const Trail& t) {
  std::string out;
  for (const auto& id : t) out += (out.empty() ? "" : ",") + id;
  return out;
}

std::vector<GridCell> sorted(std::vector<GridCell> cells) {
  std::sort(cells.begin(), cells.end(), [](const GridCell& x, const GridCell& y) {
    return std::tie(x.p, x.a) < std::tie(y.p, y.a);
  });
  return cells;
}

}  // namespace

std::string group_json(const FormalGroup& g) { return group_object(g).dump(); }

std::string cells_json(const std::vector<GridCell>& cells) {
  ordered_json out = ordered_json::array();
  for (const auto& c : sorted(cells)) out.push_back(cell_object(c));
  return out.dump(2) + "\n";
}

std::string cells_csv(const std::vector<GridCell>& cells) {
  std::string out = "a,p,weight,coeff,group,source,citation\n";
  for (const auto& c : sorted(cells))
    out += std::to_string(c.a) + "," + std::to_string(c.p) + "," + csv_field(c.weight) + "," +
           csv_field(coeff_name(c.coeff)) + "," + csv_field(c.group.to_string()) + "," + csv_field(c.source) + "," +
           csv_field(c.citation) + "\n";
  return out;
}

std::string render_grid(const std::vector<GridCell>& cells, Format format) {
  if (format == Format::json) return cells_json(cells);
  std::set<int> as;
  std::map<int, std::map<int, std::string>> rows;  // p -> a -> group
  for (const auto& c : cells) {
    as.insert(c.a);
    rows[c.p][c.a] = c.group.to_string();
  }
  if (format == Format::csv) {
    std::string out = "p\\a";
    for (int a : as) out += "," + std::to_string(a);
    out += "\n";
    for (const auto& [p, row] : rows) {
      out += std::to_string(p);
      for (int a : as) {
        auto it = row.find(a);
        out += "," + csv_field(it == row.end() ? "" : it->second);
      }
      out += "\n";
    }
    return out;
  }
  std::size_t w = 3;
  for (const auto& [p, row] : rows)
    for (const auto& [a, g] : row) w = std::max(w, width(g));
  for (int a : as) w = std::max(w, width(std::to_string(a)));
  std::ostringstream out;
  out << pad("p\\a", 4);
  for (int a : as) out << "  " << pad(std::to_string(a), w);
  out << "\n";
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    out << pad(std::to_string(it->first), 4);
    for (int a : as) {
      auto c = it->second.find(a);
      out << "  " << pad(c == it->second.end() ? "" : c->second, w);
    }
    out << "\n";
  }
  return out.str();
}

std::vector<GridCell> weight0_grid(int p_range, int a_range, Coeff coeff, Weight0Engine& engine,
                                   const FixtureSet& fixtures) {
  std::vector<GridCell> out;
  for (int p = -p_range; p <= p_range; ++p)
    for (int a = -a_range; a <= a_range; ++a) {
      GridCell c{a, p, "0", coeff, FormalGroup::from_fg(engine.group(a, p, coeff_modulus(coeff))), "computed", ""};
      auto hit = fixtures.lookup(Family::weight0, coeff, a, p, ProfileKind::general);
      if (hit) c.citation = hit->table->id + ": " + hit->row->citation;
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<GridCell> derived_grid(const DerivedTables& t, Coeff coeff, int p_range, int a_range) {
  std::vector<GridCell> out;
  int a_hi = std::min(a_range, coeff == Coeff::Z ? t.a_max : t.a_max - 1);
  for (int p : t.columns()) {
    if (std::abs(p) > p_range) continue;
    for (int a = std::max(-a_range, t.a_min); a <= a_hi; ++a) {
      auto f = t.at(a, p, coeff);
      if (!f) continue;
      out.push_back({a, p, weight_name(t.weight), coeff, f->value, "computed", "axioms: " + trail_text(f->trail)});
    }
  }
  return out;
}

std::vector<GridCell> fixture_grid(Family family, Coeff coeff, ProfileKind profile, int p_range, int a_range,
                                   const FixtureSet& fixtures) {
  std::string weight = family == Family::weight1 ? "1" : family == Family::sigma ? "sigma" : "0";
  std::vector<GridCell> out;
  for (int p = -p_range; p <= p_range; ++p)
    for (int a = -a_range; a <= a_range; ++a) {
      auto hit = fixtures.lookup(family, coeff, a, p, profile);
      if (!hit) continue;
      out.push_back({a, p, weight, coeff, hit->value, "fixture", hit->table->id + ": " + hit->row->citation});
    }
  return out;
}

std::string render_reports(const std::vector<SuiteReport>& reports, Format format, bool verbose) {
  if (format == Format::json) {
    ordered_json out = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json j;
      j["suite"] = r.suite;
      j["passed"] = r.passed();
      j["checked"] = r.checked;
      j["failures"] = r.failures;
      if (verbose) {
        ordered_json cells = ordered_json::array();
        for (const auto& c : r.cells)
          cells.push_back({{"table", c.table},
                           {"a", c.a},
                           {"p", c.p},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"passed", c.passed},
                           {"citation", c.citation}});
        j["cells"] = cells;
      }
      out.push_back(j);
    }
    return out.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "suite,table,a,p,expected,actual,passed,citation\n";
    for (const auto& r : reports)
      for (const auto& c : r.cells)
        if (verbose || !c.passed)
          out += csv_field(r.suite) + "," + csv_field(c.table) + "," + std::to_string(c.a) + "," +
                 std::to_string(c.p) + "," + csv_field(c.expected) + "," + csv_field(c.actual) + "," +
                 (c.passed ? "pass" : "fail") + "," + csv_field(c.citation) + "\n";
    return out;
  }
  std::ostringstream out;
  const std::size_t shown = 20;
  for (const auto& r : reports) {
    out << r.summary() << "\n";
    if (verbose)
      for (const auto& c : r.cells)
        out << "  " << (c.passed ? "ok   " : "FAIL ") << c.table << " (a=" << c.a << ", p=" << c.p
            << "): " << c.actual << (c.passed ? "" : " expected " + c.expected)
            << (c.citation.empty() ? "" : "  [" + c.citation + "]") << "\n";
    for (std::size_t i = 0; i < r.failures.size() && (verbose || i < shown); ++i)
      out << "  failure: " << r.failures[i] << "\n";
    if (!verbose && r.failures.size() > shown) out << "  ... " << r.failures.size() - shown << " more\n";
  }
  return out.str();
}

std::vector<std::filesystem::path> export_tables(const std::filesystem::path& dir, const ExportOptions& o,
                                                 Weight0Engine& engine, const FixtureSet& fixtures) {
  std::filesystem::create_directories(dir);
  std::string ext = o.format == Format::json ? ".json" : o.format == Format::csv ? ".csv" : ".txt";
  auto body = [&](const std::vector<GridCell>& cells) {
    if (o.format == Format::csv) return cells_csv(cells);
    return render_grid(cells, o.format);
  };
  auto tag = [](Coeff c) { return c == Coeff::Z ? std::string("Z") : std::string("Z2"); };

  std::map<std::string, std::string> files;
  for (Coeff coeff : {Coeff::Z, Coeff::Z2}) {
    files["weight0_" + tag(coeff)] = body(weight0_grid(o.p_range, o.a_range, coeff, engine, fixtures));
    files["point_" + tag(coeff)] =
        body(fixture_grid(Family::point, coeff, ProfileKind::general, o.p_range, o.a_range, fixtures));
  }
  for (Weight w : {Weight::one, Weight::sigma})
    for (ProfileKind kind : {ProfileKind::quadratically_closed, ProfileKind::euclidean, ProfileKind::formally_real}) {
      const FieldProfile& profile = FieldProfile::get(kind);
      DerivedTables t = derive(w, profile, o.n_max);
      for (Coeff coeff : {Coeff::Z, Coeff::Z2})
        files["weight" + (w == Weight::one ? std::string("1") : std::string("sigma")) + "_" + profile.short_name() +
              "_" + tag(coeff)] = body(derived_grid(t, coeff, o.n_max, o.a_range));
    }

  std::vector<std::filesystem::path> written;
  for (const auto& [name, text] : files) {
    auto path = dir / (name + ext);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace eqmot
