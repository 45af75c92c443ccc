#include "mckay/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "mckay/error.hpp"

namespace mckay::io {

Json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::ParseError, "bad integer string " + j.dump());
    return v;
  }
  throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

Json to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const std::vector<BigInt>& v) {
  Json arr = Json::array();
  for (const auto& c : v) arr.push_back(to_json(c));
  return arr;
}

// ---------------------------------------------------------------- graph JSON

Json graph_to_json(const RepGraph& g) {
  Json doc;
  doc["v_dim"] = g.v_dim();
  const bool symmetric = g.is_symmetric();
  if (!symmetric) doc["directed"] = true;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    nodes.push_back(Json{{"label", g.labels()[i]}, {"mark", g.marks()[i]}});
  }
  doc["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = symmetric ? i : 0; j < g.size(); ++j) {
      if (g.adjacency(i, j) > 0) edges.push_back(Json::array({g.labels()[i], g.labels()[j], g.adjacency(i, j)}));
    }
  }
  doc["edges"] = std::move(edges);
  return doc;
}

RepGraph graph_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "graph document must be an object");
    const long v_dim = j.at("v_dim").get<long>();
    const bool directed = j.contains("directed") && j.at("directed").get<bool>();
    std::vector<std::string> labels;
    std::vector<long> marks;
    for (const auto& node : j.at("nodes")) {
      labels.push_back(node.at("label").get<std::string>());
      marks.push_back(node.at("mark").get<long>());
    }
    if (labels.empty()) throw Error(ErrorKind::ParseError, "graph has no nodes");
    if (marks[0] != 1) throw Error(ErrorKind::InvalidParameter, "node 0 must be the trivial module (mark 1)");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    const std::size_t n = labels.size();
    IntMatrix a(n, std::vector<long>(n, 0));
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::ParseError, "edge must be [label, label, multiplicity]");
      const auto from = e[0].get<std::string>();
      const auto to = e[1].get<std::string>();
      const long mult = e[2].get<long>();
      if (!index.count(from) || !index.count(to)) {
        throw Error(ErrorKind::UnknownNode, "edge " + e.dump() + " references an unknown label");
      }
      if (mult <= 0) throw Error(ErrorKind::InvalidParameter, "edge " + e.dump() + " has non-positive multiplicity");
      const std::size_t u = index[from];
      const std::size_t v = index[to];
      if (seen[u][v] || (!directed && seen[v][u])) {
        throw Error(ErrorKind::InvalidParameter, "edge " + e.dump() + " is listed twice");
      }
      seen[u][v] = true;
      a[u][v] = mult;
      if (!directed) a[v][u] = mult;
    }
    RepGraph g(std::move(labels), std::move(marks), std::move(a), v_dim);
    g.check_dimension_count();
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("graph JSON: ") + e.what());
  }
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) throw Error(ErrorKind::ParseError, "unterminated quote in CSV line: " + line);
  cells.push_back(trim(cur));
  return cells;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

double parse_double(std::string_view s, const std::string& context) {
  double v = 0;
  const std::string str(s);
  std::size_t used = 0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad number '" + str + "' in " + context);
  }
  if (used != str.size()) throw Error(ErrorKind::ParseError, "bad number '" + str + "' in " + context);
  return v;
}

}  // namespace

std::complex<double> parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty complex literal");
  if (s.back() != 'i') return {parse_double(s, "'" + raw + "'"), 0.0};
  s.pop_back();
  // Split at the last sign that is not part of an exponent or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t, "'" + raw + "'");
  };
  if (split == std::string::npos) return {0.0, imag_part(s)};
  return {parse_double(s.substr(0, split), "'" + raw + "'"), imag_part(s.substr(split))};
}

CharacterTable parse_chartable_csv(const std::string& text) {
  CharacterTable t;
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    if (trimmed.rfind("#V=", 0) == 0) {
      t.v_label = trim(trimmed.substr(3));
      continue;
    }
    if (trimmed[0] == '#') continue;
    rows.push_back(split_csv_line(trimmed));
  }
  if (rows.size() < 3) throw Error(ErrorKind::ParseError, "character table needs class labels, sizes and at least one row");
  const std::size_t width = rows[2].size();
  if (width < 2) throw Error(ErrorKind::ParseError, "character rows need a label and at least one value");
  const std::size_t n_cls = width - 1;
  auto header = [&](const std::vector<std::string>& row, const char* what) {
    if (row.size() == width) return std::vector<std::string>(row.begin() + 1, row.end());
    if (row.size() == n_cls) return row;
    throw Error(ErrorKind::ParseError, std::string(what) + " row has " + std::to_string(row.size()) +
                                           " cells, expected " + std::to_string(n_cls));
  };
  t.class_labels = header(rows[0], "class label");
  for (const auto& s : header(rows[1], "class size")) t.class_sizes.push_back(parse_double(s, "class sizes"));
  for (std::size_t r = 2; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw Error(ErrorKind::ParseError, "row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                                             " cells, expected " + std::to_string(width));
    }
    t.irrep_labels.push_back(rows[r][0]);
    std::vector<std::complex<double>> vals;
    for (std::size_t c = 1; c < width; ++c) vals.push_back(parse_complex(rows[r][c]));
    t.values.push_back(std::move(vals));
  }
  return t;
}

CharacterTable read_chartable_file(const std::string& path) { return parse_chartable_csv(read_file(path)); }

RepGraph read_graph_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return graph_from_json(j);
}

std::string chartable_to_csv(const CharacterTable& table) {
  std::ostringstream os;
  if (table.v_label) os << "#V=" << *table.v_label << '\n';
  os << "class";
  for (const auto& l : table.class_labels) os << ',' << csv_cell(l);
  os << "\nsize";
  for (double s : table.class_sizes) os << ',' << s;
  os << '\n';
  for (std::size_t i = 0; i < table.irrep_labels.size(); ++i) {
    os << csv_cell(table.irrep_labels[i]);
    for (const auto& v : table.values[i]) {
      os << ',' << v.real();
      if (v.imag() != 0) os << (v.imag() > 0 ? "+" : "") << v.imag() << 'i';
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- documents

Json series_document(const std::string& source, const SeriesResult& r, std::size_t terms) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "series";
  doc["source"] = source;
  doc["node"] = r.node;
  doc["series"] = Json{{"numerator", to_json(r.series.num())},
                       {"denominator", to_json(r.series.den())},
                       {"coefficients", to_json(series_expand(r.series, terms))}};
  doc["cramer"] = Json{{"numerator_det", to_json(r.numerator_det)}, {"denominator_det", to_json(r.denominator_det)}};
  return doc;
}

Json bratteli_document(const std::string& source, const RepGraph& g, const std::vector<BratteliLevel>& levels) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "bratteli";
  doc["source"] = source;
  doc["nodes"] = g.labels();
  Json arr = Json::array();
  for (const auto& level : levels) {
    Json mults;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (level.mults[i] != 0) mults[g.labels()[i]] = to_json(level.mults[i]);
    }
    if (mults.is_null()) mults = Json::object();
    arr.push_back(Json{{"k", level.k}, {"multiplicities", std::move(mults)}, {"z_dim", to_json(level.z_dim)}});
  }
  doc["levels"] = std::move(arr);
  return doc;
}

Json descriptor_to_json(const GroupDescriptor& d) {
  Json j;
  j["group"] = d.kind.to_string();
  j["order"] = d.order;
  j["node_labels"] = d.node_labels;
  j["marks"] = d.marks;
  if (d.kind.is_su2()) {
    j["affine_diagram"] = d.affine_diagram;
    j["finite_diagram"] = d.finite_diagram;
    j["h"] = d.h;
    j["h_hat"] = d.h_hat;
    j["exponents_finite"] = d.exponents_finite;
    j["exponents_affine"] = d.exponents_affine;
    j["affine_exponents_tabulated"] = d.affine_exponents_tabulated;
    j["a"] = d.a_const;
    j["b"] = d.b_const;
  }
  const ClassData cd = class_data(d.kind);
  Json classes = Json::array();
  for (const auto& c : cd.classes) {
    classes.push_back(Json{{"label", c.label}, {"size", c.size}, {"chi_v", c.chi_v.to_string()}});
  }
  j["classes"] = std::move(classes);
  return j;
}

Json catalog_document(const std::vector<GroupKind>& kinds) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "catalog";
  Json groups = Json::array();
  for (const auto& k : kinds) groups.push_back(descriptor_to_json(descriptor(k)));
  doc["groups"] = std::move(groups);
  return doc;
}

Json verify_document(std::string_view suite, const VerifyReport& report) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "verification";
  doc["suite"] = std::string(suite);
  doc["passed"] = report.passed();
  doc["failures"] = report.failures();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j{{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}};
    if (c.exact) {
      j["exact"] = true;
    } else {
      std::ostringstream os;
      os.precision(3);
      os << std::scientific << static_cast<double>(c.residual);
      j["residual"] = os.str();
    }
    if (!c.detail.empty() && !c.passed) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

std::string verify_to_text(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << '[' << c.suite << "] " << c.name;
    if (c.exact) {
      os << "  (exact)";
    } else {
      os.precision(3);
      os << std::scientific << "  (residual " << static_cast<double>(c.residual) << ')' << std::defaultfloat;
    }
    if (!c.passed && !c.detail.empty()) os << "\n     " << c.detail;
    os << '\n';
  }
  os << report.checks.size() - report.failures() << '/' << report.checks.size() << " checks passed\n";
  return os.str();
}

// ---------------------------------------------------------------- DOT / text

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string graph_to_dot(const RepGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << dot_escape(name) << "\" {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << "  n" << i << " [label=\"" << dot_escape(g.labels()[i]) << "\", xlabel=\"" << g.marks()[i] << "\"";
    if (i == 0) os << ", style=filled, fillcolor=white";
    os << "];\n";
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      // Parallel edges for multiplicity; each undirected edge drawn from its lower endpoint.
      const long a = g.adjacency(i, j);
      const bool draw = g.is_symmetric() ? j >= i : true;
      if (!draw) continue;
      for (long m = 0; m < a; ++m) os << "  n" << i << " -- n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string bratteli_to_dot(const RepGraph& g, const std::vector<BratteliLevel>& levels, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << dot_escape(name) << "\" {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  for (const auto& level : levels) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (level.mults[i] == 0) continue;
      os << " L" << level.k << "_" << i << " [label=\"" << dot_escape(g.labels()[i]) << "_" << level.mults[i].get_str()
         << "\"];";
    }
    os << " Z" << level.k << " [label=\"" << level.z_dim.get_str() << "\"]; }\n";
  }
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (levels[k].mults[i] == 0) continue;
      for (std::size_t j = 0; j < g.size(); ++j) {
        for (long m = 0; m < g.adjacency(i, j); ++m) {
          os << "  L" << k << "_" << i << " -- L" << (k + 1) << "_" << j << ";\n";
        }
      }
    }
    os << "  Z" << k << " -- Z" << (k + 1) << " [style=invis];\n";
  }
  os << "}\n";
  return os.str();
}

std::string bratteli_to_text(const RepGraph& g, const std::vector<BratteliLevel>& levels) {
  std::ostringstream os;
  for (const auto& level : levels) {
    os << "k=" << level.k << ':';
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (level.mults[i] != 0) os << ' ' << g.labels()[i] << '_' << level.mults[i].get_str();
    }
    os << "  | dim Z = " << level.z_dim.get_str() << '\n';
  }
  return os.str();
}

}  // namespace mckay::io
