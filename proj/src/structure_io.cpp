#include "sapp/structure_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sapp {

using nlohmann::json;

std::vector<Line> load_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t lineno = 0;
  while (std::getline(in, text)) {
    ++lineno;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(text);
    } catch (const json::exception& e) {
      throw Error("line " + std::to_string(lineno) + ": bad JSON: " + e.what());
    }
    const std::string kind = rec.value("kind", "");
    if (kind == "vertical") {
      out.push_back(Line::vertical(parse_rational(rec.at("x").get<std::string>())));
    } else if (kind == "slanted") {
      out.push_back(Line::slanted(parse_rational(rec.at("slope").get<std::string>()),
                                  parse_rational(rec.at("intercept").get<std::string>())));
    } else {
      throw Error("line " + std::to_string(lineno) + ": unknown record kind '" + kind + "'");
    }
  }
  return out;
}

void save_lines(std::ostream& out, const std::vector<Line>& lines) {
  for (const Line& l : lines) {
    json rec;
    if (l.is_vertical()) {
      rec["kind"] = "vertical";
      rec["x"] = format_rational(l.vertical_x());
    } else {
      rec["kind"] = "slanted";
      rec["slope"] = format_rational(l.slope());
      rec["intercept"] = format_rational(l.intercept());
    }
    out << rec.dump() << "\n";
  }
}

LoadedStructure load_abstract_structure(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(std::string("bad structure JSON: ") + e.what());
  }
  const std::size_t n = doc.at("domain").get<std::size_t>();
  std::vector<std::string> warnings;
  std::set<std::pair<std::size_t, std::size_t>> given, edges;
  for (const auto& pair : doc.at("O")) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error("relation entries must be index pairs");
    const std::size_t i = pair[0].get<std::size_t>();
    const std::size_t j = pair[1].get<std::size_t>();
    if (i >= n || j >= n) throw Error("relation index out of range");
    given.insert({i, j});
    if (i == j) {
      warnings.push_back("dropped reflexive pair [" + std::to_string(i) + "," +
                         std::to_string(j) + "]");
      continue;
    }
    edges.insert({std::min(i, j), std::max(i, j)});
  }
  for (const auto& [i, j] : edges)
    if (!given.count({i, j}) || !given.count({j, i})) {
      warnings.push_back("symmetrized the relation (e.g. pair [" + std::to_string(i) +
                         "," + std::to_string(j) + "])");
      break;
    }
  return LoadedStructure{
      FiniteStructure(n, std::vector<std::pair<std::size_t, std::size_t>>(edges.begin(), edges.end())),
      std::move(warnings)};
}

void save_abstract_structure(std::ostream& out, const FiniteStructure& m) {
  json doc;
  doc["domain"] = m.size();
  // both orientations, so the file is the explicit symmetric pair set
  json rel = json::array();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.perp_at(i, j)) rel.push_back({i, j});
  doc["O"] = rel;
  out << doc.dump() << "\n";
}

LoadedStructure load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  const std::size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error("'" + path + "' is empty");

  // a lone object with "domain" is the abstract format; otherwise treat the
  // file as one line record per row
  json probe;
  std::istringstream first_line(content.substr(first, content.find('\n', first) - first));
  std::string head;
  std::getline(first_line, head);
  try {
    probe = json::parse(head);
  } catch (const json::exception&) {
    probe = nullptr;
  }
  if (probe.is_object() && probe.contains("domain")) {
    std::istringstream whole(content);
    return load_abstract_structure(whole);
  }

  std::istringstream whole(content);
  std::vector<Line> lines = load_lines(whole);
  return LoadedStructure{to_structure(lines), {}};
}

} // namespace sapp
