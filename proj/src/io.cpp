#include "qdt/io.hpp"

#include <fstream>
#include <sstream>

#include "qdt/catalog.hpp"

namespace qdt {

using nlohmann::json;

namespace {

ExtVal parse_entry(const json& v, std::size_t i, std::size_t j) {
  std::string where = "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  try {
    if (v.is_string()) return ExtVal::parse(v.get<std::string>());
    if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0))
      return ExtVal(v.get<std::int64_t>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a string such as \"1/2\" or \"inf\"");
}

std::string strip_comment(std::string line) {
  if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
  return line;
}

}  // namespace

DistanceSpace parse_space_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("space file must be a JSON object");
  if (!doc.contains("points") || !doc["points"].is_array()) throw ParseError("missing array field 'points'");
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) throw ParseError("missing array field 'matrix'");
  std::vector<std::string> labels;
  for (const auto& p : doc["points"]) {
    if (!p.is_string()) throw ParseError("point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  const auto& m = doc["matrix"];
  const std::size_t n = labels.size();
  if (m.size() != n)
    throw ParseError("matrix has " + std::to_string(m.size()) + " rows for " + std::to_string(n) + " points");
  GRel d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n)
      throw ParseError("matrix row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) d(i, j) = parse_entry(m[i][j], i, j);
  }
  std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
  return DistanceSpace(std::move(labels), std::move(d), std::move(name));
}

DistanceSpace parse_space_lines(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, name;
  std::vector<std::string> labels;
  ExtVal fill = kInf;
  struct Entry {
    std::string from, to;
    ExtVal value;
    std::size_t line;
  };
  std::vector<Entry> entries;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream words(strip_comment(line));
    std::string key;
    if (!(words >> key)) continue;
    auto fail = [&](const std::string& msg) { return ParseError("line " + std::to_string(lineno) + ": " + msg); };
    auto value = [&](const std::string& tok) {
      try {
        return ExtVal::parse(tok);
      } catch (const std::exception& e) {
        throw fail(e.what());
      }
    };
    std::string a, b, v, extra;
    if (key == "name") {
      std::getline(words >> std::ws, name);
    } else if (key == "points") {
      if (!labels.empty()) throw fail("points given twice");
      while (words >> a) labels.push_back(a);
      if (labels.empty()) throw fail("no points listed");
    } else if (key == "default") {
      if (!(words >> v) || (words >> extra)) throw fail("expected: default VALUE");
      fill = value(v);
    } else if (key == "dist") {
      if (!(words >> a >> b >> v) || (words >> extra)) throw fail("expected: dist FROM TO VALUE");
      entries.push_back({a, b, value(v), lineno});
    } else {
      throw fail("unknown keyword '" + key + "'");
    }
  }
  if (labels.empty()) throw ParseError("no 'points' line");
  const std::size_t n = labels.size();
  GRel d = GRel::filled(n, n, fill);
  auto index = [&](const std::string& l, std::size_t ln) {
    for (std::size_t i = 0; i < n; ++i)
      if (labels[i] == l) return i;
    throw ParseError("line " + std::to_string(ln) + ": unknown point '" + l + "'");
  };
  for (const Entry& e : entries) d(index(e.from, e.line), index(e.to, e.line)) = e.value;
  return DistanceSpace(std::move(labels), std::move(d), std::move(name));
}

DistanceSpace parse_space(std::string_view text) {
  auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string_view::npos && text[p] == '{') return parse_space_json(text);
  return parse_space_lines(text);
}

DistanceSpace load_space(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) {
    CatalogSpace c = catalog_get(source.substr(prefix.size()));
    if (!c.finite) throw std::invalid_argument("catalog space '" + c.name + "' has an infinite carrier");
    return *c.finite;
  }
  std::ifstream in(source);
  if (!in) throw std::runtime_error("cannot open '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str());
}

json grel_json(const GRel& d) {
  json m = json::array();
  for (std::size_t i = 0; i < d.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < d.cols(); ++j) row.push_back(d(i, j).str());
    m.push_back(row);
  }
  return m;
}

json space_json(const DistanceSpace& s) {
  return json{{"name", s.name()}, {"points", s.labels()}, {"matrix", grel_json(s.d())}};
}

std::string space_to_json(const DistanceSpace& s) { return space_json(s).dump(2); }

std::string space_to_lines(const DistanceSpace& s) {
  std::ostringstream out;
  if (!s.name().empty()) out << "name " << s.name() << "\n";
  out << "points";
  for (const auto& l : s.labels()) out << " " << l;
  out << "\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s.d()(i, j).is_finite()) out << "dist " << s.label(i) << " " << s.label(j) << " " << s.d()(i, j).str() << "\n";
  return out.str();
}

json pairs_json(const GRel& rel, const std::vector<std::string>& labels) {
  json out = json::array();
  for (std::size_t i = 0; i < rel.rows(); ++i)
    for (std::size_t j = 0; j < rel.cols(); ++j)
      if (i != j && rel(i, j).is_zero()) out.push_back({labels[i], labels[j]});
  return out;
}

std::string dot_relation(const std::string& graph_name, const std::vector<std::string>& labels, const GRel& rel) {
  const std::size_t n = rel.rows();
  auto edge = [&](std::size_t i, std::size_t j) { return i != j && rel(i, j).is_zero(); };
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "digraph " << quote(graph_name) << " {\n";
  for (std::size_t i = 0; i < n; ++i) out << "  " << quote(labels[i]) << ";\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!edge(i, j)) continue;
      // Skip edges implied by a path through a point not equivalent to either end.
      bool implied = false;
      for (std::size_t k = 0; k < n && !implied; ++k)
        implied = k != i && k != j && edge(i, k) && edge(k, j) && !edge(k, i) && !edge(j, k);
      if (!implied) out << "  " << quote(labels[i]) << " -> " << quote(labels[j]) << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace qdt
