// mckay: Poincare series of tensor-power multiplicities for finite groups.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "mckay/error.hpp"
#include "mckay/io.hpp"
#include "mckay/poincare.hpp"
#include "mckay/repgraph.hpp"
#include "mckay/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Source {
  std::string group;
  std::string graph_file;
  std::string chartable_file;
  std::string v_label;

  void add_to(CLI::App* cmd) {
    auto* g = cmd->add_option("-g,--group", group, "Group spec: Cn, Dn, T, O, I or S4");
    auto* f = cmd->add_option("--graph", graph_file, "Representation graph JSON file");
    auto* c = cmd->add_option("--chartable", chartable_file, "Character table CSV file");
    cmd->add_option("--v", v_label, "Irreducible used as V (overrides the #V= line)");
    g->excludes(f, c);
    f->excludes(c);
  }

  std::string describe() const {
    if (!group.empty()) return mckay::GroupKind::parse(group).to_string();
    if (!graph_file.empty()) return graph_file;
    return chartable_file;
  }

  mckay::RepGraph load() const {
    if (!group.empty()) return mckay::mckay_graph(mckay::GroupKind::parse(group));
    if (!graph_file.empty()) return mckay::io::read_graph_file(graph_file);
    if (!chartable_file.empty()) {
      const mckay::CharacterTable table = mckay::io::read_chartable_file(chartable_file);
      std::string v = v_label;
      if (v.empty() && table.v_label) v = *table.v_label;
      if (v.empty()) throw mckay::Error(mckay::ErrorKind::InvalidParameter, "no V given: use --v or a #V= line");
      std::vector<std::string> warnings;
      mckay::RepGraph g = mckay::graph_from_chartable(table, v, &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
      return g;
    }
    throw mckay::Error(mckay::ErrorKind::InvalidParameter, "one of --group, --graph, --chartable is required");
  }
};

std::size_t default_terms() {
  if (const char* env = std::getenv("MCKAY_TERMS_DEFAULT")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring MCKAY_TERMS_DEFAULT=" << env << '\n';
  }
  return 20;
}

std::string join(const std::vector<mckay::BigInt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
  return out;
}

int cmd_series(const Source& src, const std::string& node, std::size_t terms, const std::string& format) {
  const mckay::RepGraph g = src.load();
  const mckay::SeriesResult r = node.empty() ? mckay::series_cramer(g, 0) : mckay::series_cramer(g, node);
  if (format == "json") {
    std::cout << mckay::io::series_document(src.describe(), r, terms).dump(2) << '\n';
  } else {
    std::cout << "m^" << r.node << "(t) = (" << r.series.num().to_string() << ") / (" << r.series.den().to_string()
              << ")\n";
    std::cout << "det(M^" << r.node << ") = " << r.numerator_det.to_string() << '\n';
    std::cout << "det(I - tA) = " << r.denominator_det.to_string() << '\n';
    std::cout << "coefficients: " << join(mckay::series_expand(r.series, terms)) << '\n';
  }
  return 0;
}

int cmd_bratteli(const Source& src, long levels, const std::string& format) {
  if (levels < 0) throw mckay::Error(mckay::ErrorKind::InvalidParameter, "--levels must be non-negative");
  const mckay::RepGraph g = src.load();
  const auto diagram = mckay::bratteli(g, static_cast<std::size_t>(levels));
  if (format == "json") {
    std::cout << mckay::io::bratteli_document(src.describe(), g, diagram).dump(2) << '\n';
  } else if (format == "dot") {
    std::cout << mckay::io::bratteli_to_dot(g, diagram, src.describe());
  } else {
    std::cout << mckay::io::bratteli_to_text(g, diagram);
  }
  return 0;
}

int cmd_verify(const std::string& suite, double tolerance, const std::string& group, unsigned n_max,
               const std::string& format) {
  mckay::VerifyOptions opt;
  opt.tolerance = tolerance;
  opt.n_max = n_max;
  if (!group.empty()) opt.only = mckay::GroupKind::parse(group);
  const mckay::VerifyReport report = mckay::run_suite(suite, opt);
  if (format == "json") {
    std::cout << mckay::io::verify_document(suite, report).dump(2) << '\n';
  } else {
    std::cout << mckay::io::verify_to_text(report);
  }
  return report.passed() ? 0 : kExitVerifyFailed;
}

int cmd_export(const Source& src, const std::string& what, const std::string& format) {
  if (what == "catalog") {
    if (format != "json") throw mckay::Error(mckay::ErrorKind::InvalidParameter, "catalog export is JSON only");
    auto kinds = mckay::su2_catalog();
    kinds.push_back(mckay::GroupKind::s4());
    std::cout << mckay::io::catalog_document(kinds).dump(2) << '\n';
    return 0;
  }
  if (what == "chartable") {
    if (format != "csv") throw mckay::Error(mckay::ErrorKind::InvalidParameter, "character tables export as CSV");
    if (mckay::GroupKind::parse(src.group.empty() ? "S4" : src.group) != mckay::GroupKind::s4()) {
      throw mckay::Error(mckay::ErrorKind::InvalidKind, "only the S4 character table is stored");
    }
    std::cout << mckay::io::chartable_to_csv(mckay::s4_character_table());
    return 0;
  }
  const mckay::RepGraph g = src.load();
  if (format == "dot") {
    std::cout << mckay::io::graph_to_dot(g, src.describe());
  } else if (format == "json") {
    mckay::io::Json doc;
    doc["schema_version"] = mckay::io::kSchemaVersion;
    doc["kind"] = "graph";
    doc["source"] = src.describe();
    const mckay::io::Json body = mckay::io::graph_to_json(g);
    for (const auto& [k, v] : body.items()) doc[k] = v;
    std::cout << doc.dump(2) << '\n';
  } else {
    throw mckay::Error(mckay::ErrorKind::InvalidParameter, "graph export supports json or dot");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare series for tensor-power multiplicities via representation graphs"};
  app.require_subcommand(1);

  Source series_src;
  std::string node;
  std::size_t terms = default_terms();
  std::string series_format = "text";
  auto* series = app.add_subcommand("series", "Rational generating function m^mu(t) and its coefficients");
  series_src.add_to(series);
  series->add_option("-n,--node", node, "Node label (default: the trivial module)");
  series->add_option("-k,--terms", terms, "Number of coefficients (default $MCKAY_TERMS_DEFAULT or 20)")
      ->check(CLI::PositiveNumber);
  series->add_option("-f,--format", series_format)->check(CLI::IsMember({"json", "text"}));

  Source brat_src;
  long levels = 8;
  std::string brat_format = "text";
  auto* brat = app.add_subcommand("bratteli", "Level-by-level multiplicities and centralizer dimensions");
  brat_src.add_to(brat);
  brat->add_option("-l,--levels", levels, "Last level k");
  brat->add_option("-f,--format", brat_format)->check(CLI::IsMember({"json", "dot", "text"}));

  std::string suite = "all";
  double tolerance = 1e-9;
  std::string verify_group;
  unsigned n_max = 12;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("-s,--suite", suite)->check(CLI::IsMember({"all", "chebyshev", "steinberg", "closedform",
                                                                "molien", "oracle"}));
  verify->add_option("-t,--tolerance", tolerance)->check(CLI::PositiveNumber);
  verify->add_option("-g,--group", verify_group, "Restrict per-group checks to one group");
  verify->add_option("--n-max", n_max, "Upper end of the cyclic/dihedral sweep")->check(CLI::Range(2u, 64u));
  verify->add_option("-f,--format", verify_format)->check(CLI::IsMember({"json", "text"}));

  Source export_src;
  std::string what = "graph";
  std::string export_format = "json";
  auto* exp = app.add_subcommand("export", "Dump a representation graph, the catalog or the S4 character table");
  export_src.add_to(exp);
  exp->add_option("-w,--what", what)->check(CLI::IsMember({"graph", "catalog", "chartable"}));
  exp->add_option("-f,--format", export_format)->check(CLI::IsMember({"json", "dot", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*series) return cmd_series(series_src, node, terms, series_format);
    if (*brat) return cmd_bratteli(brat_src, levels, brat_format);
    if (*verify) return cmd_verify(suite, tolerance, verify_group, n_max, verify_format);
    if (*exp) return cmd_export(export_src, what, export_format);
  } catch (const mckay::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
