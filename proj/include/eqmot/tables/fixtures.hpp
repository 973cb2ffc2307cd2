#pragma once

#include "eqmot/formal/motivic.hpp"
#include "eqmot/formal/profile.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqmot {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { point, weight0, weight1, sigma };
// Local coordinates (n, m) of a table:
//   plain    n = p, m = a
//   positive H^{nσ-m}: n = p, m = -a
//   negative H^{m-nσ}: n = -p, m = a
enum class Coords { plain, positive, negative };

Family parse_family(const std::string& text);  // "point", "weight0", "weight1", "sigma"
std::string family_name(Family f);

// c·n + k, written "n-1", "-n", "2", "-n+1"
struct Affine {
  long coef = 0;
  long constant = 0;

  long at(long n) const { return coef * n + constant; }
  std::string to_string() const;
  static Affine parse(const std::string& text);
};

struct Predicate {
  std::optional<int> n_parity;  // 0 even, 1 odd
  std::optional<int> m_parity;
  std::optional<long> n_min, n_max;
  std::vector<Affine> m_lower;  // m >= each
  std::vector<Affine> m_upper;  // m <= each
  bool otherwise = false;

  bool matches(long n, long m) const;
  std::string to_string() const;
};

struct FixtureRow {
  Predicate when;
  std::string value_text;
  FormalGroup value;
  std::string citation;
};

struct FixtureTable {
  std::string id;
  std::string title;
  std::string file;
  Family family = Family::point;
  Coeff coeff = Coeff::Z;
  Coords coords = Coords::plain;
  Predicate domain;
  std::vector<ProfileKind> profiles;
  std::vector<FixtureRow> rows;

  std::pair<long, long> local(int a, int p) const;
  std::pair<int, int> global(long n, long m) const;  // inverse of local
  bool contains(int a, int p) const;
  bool admits(ProfileKind kind) const;
  // indices of the case rows (not the otherwise row) matching the point
  std::vector<std::size_t> matching_rows(int a, int p) const;
  // the first matching case row, else the otherwise row; nullptr if neither
  const FixtureRow* lookup(int a, int p) const;
  // rows whose citation is blank
  std::vector<std::size_t> uncited_rows() const;
};

struct FixtureHit {
  const FixtureTable* table = nullptr;
  const FixtureRow* row = nullptr;
  FormalGroup value;  // normalized under the requested profile
};

class FixtureSet {
 public:
  // every *.json file in dir, in file name order
  static FixtureSet load(const std::filesystem::path& dir);
  static FixtureSet from_json_text(const std::string& text, const std::string& file = "<memory>");
  // $EQMOT_FIXTURES if set, else the compiled-in directory
  static std::filesystem::path default_dir();
  // loaded once from default_dir()
  static const FixtureSet& standard();

  const std::vector<FixtureTable>& tables() const { return tables_; }
  const FixtureTable& table(const std::string& id) const;
  void add(FixtureTable t);

  // tables of the family and coefficients containing (a, p) and admitting the profile,
  // in load order
  std::vector<const FixtureTable*> covering(Family family, Coeff coeff, int a, int p,
                                            std::optional<ProfileKind> profile = std::nullopt) const;
  std::optional<FixtureHit> lookup(Family family, Coeff coeff, int a, int p, ProfileKind profile) const;

  // one line per table or row without a citation
  std::vector<std::string> citation_problems() const;

 private:
  std::vector<FixtureTable> tables_;
};

}  // namespace eqmot
