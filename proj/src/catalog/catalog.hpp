#pragma once

#include <array>
#include <string>
#include <vector>

#include "classifier/classifier.hpp"

namespace cs {

using Point3 = std::array<Complex, 3>;

struct CatalogEntry {
  ClassLabel label;
  std::string potential;  // display only
  std::string sextic;     // closed form, display only
  std::string poles;      // human-readable domain restriction
  std::string factor_structure;
  std::vector<Point3> samples;  // three admissible points
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(ClassLabel c);

// Throws DomainError on a pole of the entry. System S ignores the point and
// returns the fixed seeded sextic.
Sextic catalog_sextic(ClassLabel c, const Point3& x);

// Fixed generic Y used for system S, and the seed it was drawn with.
const YSeptet& s_fixture_y();
constexpr unsigned kSFixtureSeed = 7;

struct Table3Cell {
  ClassLabel system;
  Point3 point;
  Pattern pattern;
  std::array<Real, 9> residuals;
  bool matches;
};

struct Table3Report {
  std::vector<Table3Cell> cells;
  bool ok = true;
  std::vector<std::string> mismatches;  // system, point, ideal, residual
};

Table3Report reproduce_table3();

}  // namespace cs
