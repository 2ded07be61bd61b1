#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "catalog/catalog.hpp"
#include "cli/json_io.hpp"
#include "flow/flow.hpp"

namespace cs {

enum ExitCode { kExitOk = 0, kExitBadInput = 1, kExitDomain = 2, kExitInconsistent = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "1.5", "-2i", "0.5+1i", "3e-2-4e-1i"
Complex parse_complex_token(const std::string& s);
// Comma-separated list of exactly n complex tokens.
std::vector<Complex> parse_complex_list(const std::string& s, std::size_t n);
// "x,y,z;x,y,z;..." (real offsets).
Path parse_path(const std::string& s, int steps);

json catalog_json();
json catalog_entry_json(const CatalogEntry& e);
json table3_json(const Table3Report& rep);

}  // namespace cs
