#pragma once

#include "eqmot/formal/derive.hpp"
#include "eqmot/tables/harness.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace eqmot {

enum class Format { text, json, csv };
Format parse_format(const std::string& text);

struct GridCell {
  int a = 0, p = 0;
  std::string weight;  // "0", "1", "sigma"
  Coeff coeff = Coeff::Z;
  FormalGroup group;
  std::string source;  // "computed" or "fixture"
  std::string citation;
};

// {"rank", "torsion", "symbolic", "text"}
std::string group_json(const FormalGroup& g);
// one object per cell, in the documented schema
std::string cells_json(const std::vector<GridCell>& cells);
// a,p,weight,coeff,group,source,citation
std::string cells_csv(const std::vector<GridCell>& cells);
// one row per p, one column per a
std::string render_grid(const std::vector<GridCell>& cells, Format format);

std::vector<GridCell> weight0_grid(int p_range, int a_range, Coeff coeff, Weight0Engine& engine,
                                   const FixtureSet& fixtures = FixtureSet::standard());
std::vector<GridCell> derived_grid(const DerivedTables& t, Coeff coeff, int p_range, int a_range);
// cells outside every table are left out
std::vector<GridCell> fixture_grid(Family family, Coeff coeff, ProfileKind profile, int p_range, int a_range,
                                   const FixtureSet& fixtures = FixtureSet::standard());

std::string render_reports(const std::vector<SuiteReport>& reports, Format format, bool verbose);

struct ExportOptions {
  int p_range = 8;
  int a_range = 12;
  int n_max = 16;
  Format format = Format::json;
};
// Writes one file per table into dir and returns the paths written, sorted.
std::vector<std::filesystem::path> export_tables(const std::filesystem::path& dir, const ExportOptions& options,
                                                 Weight0Engine& engine,
                                                 const FixtureSet& fixtures = FixtureSet::standard());

}  // namespace eqmot
