#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sapp/geometry.hpp"

namespace sapp {

// Line-set files hold one JSON record per text line:
//   {"kind":"slanted","slope":"p/q","intercept":"r/s"}
//   {"kind":"vertical","x":"p/q"}
// Rationals are strings "p/q"; reduction is not required on input and is
// always applied on output.
std::vector<Line> load_lines(std::istream& in);
void save_lines(std::ostream& out, const std::vector<Line>& lines);

// Abstract structure files are a single JSON object
//   {"domain": n, "O": [[i,j], ...]}
// with 0-based indices. The relation is symmetrized and de-reflexivized on
// load; a warning is recorded when the input was not already symmetric and
// irreflexive.
struct LoadedStructure {
  FiniteStructure structure;
  std::vector<std::string> warnings;
};

LoadedStructure load_abstract_structure(std::istream& in);
void save_abstract_structure(std::ostream& out, const FiniteStructure& m);

// Loads either file format, sniffing on the first record: objects with a
// "domain" key are abstract structures, "kind" records are line sets.
LoadedStructure load_structure_file(const std::string& path);

} // namespace sapp
