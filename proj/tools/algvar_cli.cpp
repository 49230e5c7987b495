#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "algvar/catalog.hpp"
#include "algvar/graph.hpp"
#include "algvar/identity.hpp"
#include "algvar/invariants.hpp"
#include "algvar/report.hpp"
#include "algvar/tensor_io.hpp"

using namespace algvar;
using nlohmann::json;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kUnknown = 3;

int exit_code(Verdict v) { return v == Verdict::yes ? kYes : v == Verdict::no ? kNo : kUnknown; }

struct Output {
  bool json_mode = false;
  std::string out_dir;

  /// Prints the text or the JSON report and saves the JSON under --out.
  void emit(const std::string& name, const std::string& text, const json& report) const {
    std::string dumped = report.dump(2) + "\n";
    std::cout << (json_mode ? dumped : text);
    if (out_dir.empty()) return;
    std::filesystem::create_directories(out_dir);
    std::ofstream(out_dir + "/" + name + ".json") << dumped;
  }
};

StructureTensor load_algebra(const std::string& arg) {
  if (arg == "zero-algebra" || arg == kZeroAlgebra) return zero_algebra(2);
  StructureTensor t = load_tensor_file(arg);
  if (!is_numeric(t)) throw ParseError(arg + ": structure constants must be numbers");
  return t;
}

json witness_json(const Witness& w) {
  int n = w.F.dim();
  json f = json::array();
  json phi = json::array();
  for (int a = 0; a < n; ++a) {
    json frow = json::array();
    json prow = json::array();
    for (int b = 0; b < n; ++b) {
      json v = json::array();
      for (int k = 0; k < n; ++k) v.push_back(w.F(a, b, k).to_string());
      frow.push_back(v);
      prow.push_back(w.phi(a, b).to_string());
    }
    f.push_back(frow);
    phi.push_back(prow);
  }
  return {{"F", f}, {"phi", phi}, {"free", w.free_symbols}};
}

int cmd_check(const std::string& file, const std::string& identity, const RunConfig& config, const Output& out) {
  StructureTensor t = load_algebra(file);
  json body = {{"algebra", file}, {"identity", identity}};
  Verdict v = Verdict::unknown;
  std::string detail;
  if (identity == "jordan") {
    if (!is_commutative(t)) {
      v = Verdict::no;
      detail = "not commutative";
    } else {
      v = is_jordan(t) ? Verdict::yes : Verdict::no;
    }
  } else {
    IdentityReport r = identity == "terminal"       ? is_terminal(t)
                       : identity == "conservative" ? is_conservative(t)
                                                    : is_rigid(t);
    v = r.verdict;
    detail = r.detail;
    if (r.witness) body["witness"] = witness_json(*r.witness);
    if (r.solution_dim) body["solution_dim"] = *r.solution_dim;
  }
  body["verdict"] = to_string(v);
  if (!detail.empty()) body["detail"] = detail;
  std::string text = file + " " + identity + ": " + to_string(v) + (detail.empty() ? "" : " (" + detail + ")") + "\n";
  out.emit("check", text, report_json("check", config, body));
  return exit_code(v);
}

int cmd_verify_tables(std::vector<int> tables, const RunConfig& config, const Output& out) {
  if (tables.empty()) tables = {1, 2, 3, 4, 5, 6, 7, 8};
  Catalog cat = Catalog::load(config.data_dir);
  std::ostringstream text;
  json results = json::array();
  bool all = true;
  for (int table : tables) {
    TableResult r = verify_table(cat, table, config);
    all = all && r.pass();
    text << "table " << table << ": " << r.passed() << "/" << r.rows.size() << " rows pass\n";
    json rows = json::array();
    for (const auto& row : r.rows) {
      if (!row.pass || config.verbosity > 0) text << "  " << row.id << (row.pass ? " pass " : " FAIL ") << row.detail.dump() << "\n";
      rows.push_back({{"id", row.id}, {"pass", row.pass}, {"detail", row.detail}});
    }
    results.push_back({{"table", table}, {"passed", r.passed()}, {"total", r.rows.size()}, {"rows", rows}});
  }
  out.emit("verify-tables", text.str(), report_json("verify-tables", config, {{"tables", results}, {"pass", all}}));
  return all ? kYes : kNo;
}

std::string write_dot(const std::string& path, const std::string& dot) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << dot;
  return path;
}

std::vector<LabeledEdge> read_dot_edges(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  auto edges = parse_dot(ss.str());
  std::sort(edges.begin(), edges.end());
  return edges;
}

int cmd_graph(const std::string& dot_path, bool lattice, bool force, const RunConfig& config, const Output& out) {
  Catalog cat = Catalog::load(config.data_dir);
  std::string dir = config.data_dir.empty() ? std::string(ALGVAR_DEFAULT_DATA_DIR) : config.data_dir;
  if (!force) {
    for (int table : {6, 8}) {
      TableResult r = verify_table(cat, table, config);
      if (!r.pass()) throw Error("verification incomplete: table " + std::to_string(table) + " has failing rows (use --force)");
    }
  }
  auto checked = checked_witnesses(cat, config, force);
  for (const auto& c : checked)
    if (!c.verified) throw Error("verification incomplete: witness " + c.witness.id + " does not verify (use --force)");
  DegenerationGraph g = build_graph(cat, checked, config.seed);

  auto primary = primary_degenerations(g);
  std::map<std::string, int> levels;
  for (const auto& n : g.nodes())
    if (n.kind != NodeKind::instance) levels[n.family] = n.level;
  auto golden1 = labeled_edges_from_json(read_json_file(dir + "/figure1.json"));
  bool fig1 = primary == golden1;
  std::ostringstream text;
  json body;
  if (!dot_path.empty()) {
    write_dot(dot_path, to_dot(primary, levels, "primary degenerations"));
    bool parsed = read_dot_edges(dot_path) == golden1;
    fig1 = fig1 && parsed;
    body["dot"] = dot_path;
  }
  text << "figure 1: " << primary.size() << " edges, " << (fig1 ? "matches" : "differs from") << " golden\n";
  body["figure1"] = {{"edges", labeled_edges_to_json(primary)["edges"]}, {"matches_golden", fig1}};

  bool fig2 = true;
  if (lattice) {
    std::vector<LabeledEdge> hasse;
    for (const auto& [a, b] : closure_lattice(g)) hasse.push_back({a, b, ""});
    std::sort(hasse.begin(), hasse.end());
    fig2 = hasse == labeled_edges_from_json(read_json_file(dir + "/figure2.json"));
    if (!out.out_dir.empty()) write_dot(out.out_dir + "/lattice.dot", to_dot(hasse, {}, "lattice of orbit closures"));
    text << "figure 2: " << hasse.size() << " edges, " << (fig2 ? "matches" : "differs from") << " golden\n";
    body["figure2"] = {{"edges", labeled_edges_to_json(hasse)["edges"]}, {"matches_golden", fig2}};
  }

  json components = json::object();
  text << "irreducible components:\n";
  for (const auto& id : g.maximal()) {
    auto members = g.closure_description(id);
    components[id] = members;
    text << "  " << id << ":";
    for (const auto& m : members) text << " " << m;
    text << "\n";
  }
  auto open = open_orbit_check(g);
  text << "open orbit:";
  for (const auto& id : open) text << " " << id;
  text << "\n";
  body["components"] = components;
  body["open_orbit"] = open;
  body["forced"] = force;
  out.emit("graph", text.str(), report_json("graph", config, body));
  return fig1 && fig2 ? kYes : kNo;
}

int cmd_iso(const std::string& a_file, const std::string& b_file, const RunConfig& config, const Output& out) {
  StructureTensor a = load_algebra(a_file);
  StructureTensor b = load_algebra(b_file);
  if (a.dim() != b.dim()) throw DimensionMismatch("algebras have dimensions " + std::to_string(a.dim()) + " and " +
                                                  std::to_string(b.dim()));
  IsomorphismResult r = are_isomorphic(a, b, config.groebner);
  json body = {{"a", a_file}, {"b", b_file}, {"verdict", to_string(r.verdict)}};
  std::string text = "isomorphic: " + to_string(r.verdict) + "\n";
  if (r.witness) {
    body["witness"] = matrix_to_string(*r.witness);
    text += "g = " + matrix_to_string(*r.witness) + "\n";
  }
  if (!r.reason.empty()) {
    body["reason"] = r.reason;
    text += r.reason + "\n";
  }
  out.emit("iso", text, report_json("iso", config, body));
  return exit_code(r.verdict);
}

int cmd_invariants(const std::string& file, const RunConfig& config, const Output& out) {
  StructureTensor t = load_algebra(file);
  json body = {{"algebra", file},
               {"dim", t.dim()},
               {"derivations", derivation_algebra_dim(t)},
               {"orbit_dim", orbit_dim(t)},
               {"square_dim", product_span_dim(t)},
               {"commutator_dim", commutator_span_dim(t)},
               {"commutative", is_commutative(t)}};
  std::ostringstream text;
  for (const auto& [k, v] : body.items())
    if (k != "algebra") text << k << ": " << v.dump() << "\n";
  out.emit("invariants", text.str(), report_json("invariants", config, body));
  return kYes;
}

int cmd_sample(const std::string& family, const RunConfig& config, const Output& out) {
  Catalog cat = Catalog::load(config.data_dir);
  const Family& f = cat.get(family);
  json points = json::array();
  std::ostringstream text;
  for (const auto& a : cat.sample(f, f.is_point() ? 1 : config.samples, row_seed(config.seed, family))) {
    json params = json::object();
    for (const auto& [k, v] : a) params[k] = v.to_string();
    StructureTensor t = cat.instantiate(f, a);
    points.push_back({{"params", params}, {"algebra", tensor_to_json(t)}});
    text << params.dump() << " " << to_string(t) << "\n";
  }
  out.emit("sample", text.str(), report_json("sample", config, {{"family", family}, {"points", points}}));
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of small nonassociative algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  config.data_dir = ALGVAR_DEFAULT_DATA_DIR;
  Output out;
  app.add_option("--seed", config.seed, "seed for every random choice");
  app.add_option("--samples", config.samples, "parameter points per family")->check(CLI::PositiveNumber);
  app.add_option("--out", out.out_dir, "directory for JSON reports and extra DOT files");
  app.add_flag("--json", out.json_mode, "print the JSON report instead of text");
  app.add_option("--degree-cap", config.groebner.degree_cap, "Groebner degree cap")->check(CLI::PositiveNumber);
  app.add_option("--pair-cap", config.groebner.pair_cap, "Groebner pair cap")->check(CLI::PositiveNumber);
  app.add_option("--data", config.data_dir, "catalog directory")->envname("ALGVAR_DATA");
  app.add_option("--threads", config.threads, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  app.add_flag("-v,--verbose", config.verbosity, "list every row");

  std::string file, file_b, identity = "terminal", family, dot_path;
  std::vector<int> tables;
  bool lattice = false, force = false;

  auto* check = app.add_subcommand("check", "decide an identity for an algebra file");
  check->add_option("algebra", file, "algebra JSON file or zero-algebra")->required();
  check->add_option("--identity", identity, "identity to decide")
      ->check(CLI::IsMember({"terminal", "conservative", "rigid", "jordan"}));

  auto* verify = app.add_subcommand("verify-tables", "verify catalog tables");
  verify->add_option("tables", tables, "table numbers 1..8 (default all)")->check(CLI::Range(1, 8));

  auto* graph = app.add_subcommand("graph", "rebuild the degeneration graph");
  graph->add_option("--dot", dot_path, "write the primary degenerations as DOT");
  graph->add_flag("--lattice", lattice, "rebuild the closure lattice as well");
  graph->add_flag("--force", force, "skip verification and trust every witness");

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two algebras");
  iso->add_option("a", file, "first algebra")->required();
  iso->add_option("b", file_b, "second algebra")->required();

  auto* inv = app.add_subcommand("invariants", "print invariants of an algebra");
  inv->add_option("algebra", file, "algebra JSON file")->required();

  auto* sample = app.add_subcommand("sample", "sample parameter points of a family");
  sample->add_option("family", family, "catalog row name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    config.validate();
    if (*check) return cmd_check(file, identity, config, out);
    if (*verify) return cmd_verify_tables(tables, config, out);
    if (*graph) return cmd_graph(dot_path, lattice, force, config, out);
    if (*iso) return cmd_iso(file, file_b, config, out);
    if (*inv) return cmd_invariants(file, config, out);
    if (*sample) return cmd_sample(family, config, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
