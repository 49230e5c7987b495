#include "algvar/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "algvar/deformation.hpp"
#include "algvar/expr_parser.hpp"
#include "algvar/identity.hpp"
#include "algvar/separating.hpp"
#include "algvar/tensor_io.hpp"

namespace algvar {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string path_in(const RunConfig& config, const std::string& file) {
  std::string dir = config.data_dir.empty() ? std::string(ALGVAR_DEFAULT_DATA_DIR) : config.data_dir;
  return dir + "/" + file;
}

std::vector<Assignment> points_of(const Catalog& cat, const Family& f, int count, std::uint64_t seed) {
  return cat.sample(f, f.is_point() ? 1 : count, seed);
}

struct Classification {
  Verdict terminal, conservative, rigid;
  bool pinned = false;
};

Classification classify(const StructureTensor& t) {
  Classification c{is_terminal(t).verdict, is_conservative(t).verdict, is_rigid(t).verdict, false};
  c.pinned = pinned_conservative_holds(t);
  return c;
}

/// Counts verdicts and containment-chain violations over sampled points.
struct Tally {
  int points = 0;
  int terminal = 0, conservative = 0, rigid = 0, unknown = 0;
  int chain_violations = 0, pinned_mismatches = 0;

  void add(const Classification& c) {
    ++points;
    terminal += c.terminal == Verdict::yes;
    conservative += c.conservative == Verdict::yes;
    rigid += c.rigid == Verdict::yes;
    unknown += (c.terminal == Verdict::unknown) + (c.conservative == Verdict::unknown) + (c.rigid == Verdict::unknown);
    if ((c.terminal == Verdict::yes && c.conservative != Verdict::yes) ||
        (c.conservative == Verdict::yes && c.rigid != Verdict::yes))
      ++chain_violations;
    if (c.pinned != (c.terminal == Verdict::yes)) ++pinned_mismatches;
  }
  bool consistent() const { return unknown == 0 && chain_violations == 0 && pinned_mismatches == 0; }
  nlohmann::json to_json() const {
    return {{"points", points},
            {"terminal", terminal},
            {"conservative", conservative},
            {"rigid", rigid},
            {"unknown", unknown},
            {"chain_violations", chain_violations},
            {"pinned_mismatches", pinned_mismatches}};
  }
};

Tally tally_family(const Catalog& cat, const Family& f, int count, std::uint64_t seed) {
  Tally t;
  for (const auto& a : points_of(cat, f, count, seed)) t.add(classify(cat.instantiate(f, a)));
  return t;
}

struct Expectation {
  std::string family;
  Assignment fix;
  Assignment avoid;
};

std::vector<Expectation> expectations(const nlohmann::json& j, const std::string& key) {
  std::vector<Expectation> out;
  for (const auto& e : j.value(key, nlohmann::json::array())) {
    Expectation x{e.at("family").get<std::string>(), {}, {}};
    nlohmann::json fix = e.value("fix", nlohmann::json::object());
    nlohmann::json avoid = e.value("avoid", nlohmann::json::object());
    for (const auto& [k, v] : fix.items()) x.fix[k] = eval_expr(v.get<std::string>(), {});
    for (const auto& [k, v] : avoid.items()) x.avoid[k] = eval_expr(v.get<std::string>(), {});
    out.push_back(std::move(x));
  }
  return out;
}

/// Points for an expectation: the fixed point, or samples away from `avoid`.
std::vector<Assignment> expectation_points(const Catalog& cat, const Expectation& e, int count, std::uint64_t seed) {
  const Family& f = cat.get(e.family);
  if (!e.fix.empty()) return {e.fix};
  std::vector<Assignment> out;
  for (const auto& a : points_of(cat, f, 2 * count, seed)) {
    if (!e.avoid.empty() && a == e.avoid) continue;
    if (static_cast<int>(out.size()) < (f.is_point() ? 1 : count)) out.push_back(a);
  }
  return out;
}

nlohmann::json expectation_check(const Catalog& cat, const Expectation& e, IdentityKind kind, bool terminal,
                                 int count, std::uint64_t seed, bool& pass) {
  int points = 0, no = 0;
  for (const auto& a : expectation_points(cat, e, count, seed)) {
    StructureTensor t = cat.instantiate(e.family, a);
    Verdict v = terminal ? is_terminal(t).verdict : decide_identity(t, kind).verdict;
    ++points;
    no += v == Verdict::no;
  }
  pass = pass && points > 0 && no == points;
  return {{"points", points}, {"no", no}};
}

RowResult table1_row(const Catalog& cat, const Family& f, const nlohmann::json& expect, const RunConfig& config) {
  RowResult row{1, f.name, true, {}};
  std::uint64_t seed = row_seed(config.seed, f.name);
  Tally t = tally_family(cat, f, config.samples, seed);
  row.detail = t.to_json();
  row.pass = t.consistent();
  for (const auto& e : expectations(expect, "non_terminal"))
    if (e.family == f.name)
      row.detail["expect_non_terminal"] = expectation_check(cat, e, IdentityKind::rigid, true, config.samples, seed,
                                                            row.pass);
  for (const auto& e : expectations(expect, "non_rigid"))
    if (e.family == f.name)
      row.detail["expect_non_rigid"] = expectation_check(cat, e, IdentityKind::rigid, false, config.samples, seed,
                                                         row.pass);
  return row;
}

/// Tables 2 and 3: every sampled point has the identity and every display
/// for the row satisfies it by substitution.
RowResult identity_row(const Catalog& cat, int table, const Family& f, const std::vector<WitnessDisplay>& displays,
                       const RunConfig& config) {
  bool conservative = table == 3;
  RowResult row{table, f.name, true, {}};
  std::uint64_t seed = row_seed(config.seed, f.name);
  Tally t = tally_family(cat, f, config.samples, seed);
  row.detail = t.to_json();
  int expected = conservative ? t.conservative : t.rigid;
  row.pass = t.consistent() && expected == t.points;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& d : displays) {
    if (std::find(d.rows.begin(), d.rows.end(), f.name) == d.rows.end()) continue;
    int ok = 0, total = 0;
    for (const auto& a : display_samples(cat, d, f.name, config.samples, seed)) {
      auto [fm, phi] = display_at(d, a, conservative);
      ++total;
      ok += witness_satisfies(cat.instantiate(f, a), fm, phi);
    }
    checks.push_back({{"display", d.id}, {"points", total}, {"satisfied", ok}});
    row.pass = row.pass && total > 0 && ok == total;
  }
  if (checks.empty()) row.pass = false;
  row.detail["displays"] = checks;
  return row;
}

RowResult table4_row(const Catalog& cat, const Family& f, const nlohmann::json& expect, const RunConfig& config) {
  RowResult row{4, f.name, true, {}};
  Tally t = tally_family(cat, f, config.samples, row_seed(config.seed, f.name));
  row.detail = t.to_json();
  row.pass = t.consistent() && t.terminal == t.points;
  for (const auto& name : expect.value("symbolic_terminal", nlohmann::json::array()))
    if (name.get<std::string>() == f.name) {
      auto sym = cat.symbolic(f);
      bool holds = false;
      if (sym) {
        auto conds = terminal_conditions(*sym);
        holds = std::all_of(conds.begin(), conds.end(), [](const MultiPoly& p) { return p.is_zero(); });
      }
      row.detail["symbolic_terminal"] = holds;
      row.pass = row.pass && holds;
    }
  return row;
}

RowResult witness_row(const Catalog& cat, int table, const DegenerationWitness& w, const RunConfig& config) {
  DegenerationCheck c = verify_degeneration(cat, w, config.groebner);
  RowResult row{table, w.id, c.verified, {}};
  row.detail = {{"source", w.source},
                {"target", w.target.family},
                {"uniform", w.uniform()},
                {"verified", c.verified},
                {"det_order", c.det_order},
                {"det_leading", c.det_leading.to_string()}};
  if (!c.reason.empty()) row.detail["reason"] = c.reason;
  return row;
}

RowResult separating_row(const Catalog& cat, int table, const SeparatingSet& s, const RunConfig& config) {
  SeparatingOptions opts;
  opts.samples = config.stability_samples;
  opts.borel_per_sample = config.borel_per_sample;
  opts.target_samples = config.target_samples;
  opts.seed = row_seed(config.seed, s.id);
  opts.groebner = config.groebner;
  SeparatingReport r = verify_separating_set(cat, s, opts);
  RowResult row{table, s.id, r.passed(), {}};
  nlohmann::json targets = nlohmann::json::array();
  for (const auto& t : r.targets)
    targets.push_back({{"target", t.target},
                       {"symbolic", to_string(t.symbolic)},
                       {"sampled", std::to_string(t.sampled_passed) + "/" + std::to_string(t.sampled_total)}});
  row.detail = {{"membership", r.membership},
                {"stability_sampled", r.stability_sampled},
                {"stability_points", r.stability_points},
                {"stability_symbolic", to_string(r.stability_symbolic)},
                {"targets", targets}};
  if (!r.counterexample.empty()) row.detail["counterexample"] = r.counterexample;
  return row;
}

template <class Item, class F>
std::vector<RowResult> run_rows(const std::vector<Item>& items, const RunConfig& config, F&& make) {
  std::vector<RowResult> rows(items.size());
  parallel_for(static_cast<int>(items.size()), config.threads, [&](int i) { rows[i] = make(items[i]); });
  return rows;
}

}  // namespace

void RunConfig::validate() const {
  if (samples < 1 || stability_samples < 1 || borel_per_sample < 1 || target_samples < 1)
    throw Error("sample counts must be positive");
  if (groebner.degree_cap < 1 || groebner.pair_cap < 1) throw Error("Groebner caps must be positive");
  if (threads < 0) throw Error("thread count must be non-negative");
}

nlohmann::json RunConfig::to_json() const {
  return {{"seed", seed},
          {"samples", samples},
          {"stability_samples", stability_samples},
          {"borel_per_sample", borel_per_sample},
          {"target_samples", target_samples},
          {"degree_cap", groebner.degree_cap},
          {"pair_cap", groebner.pair_cap}};
}

std::string RunConfig::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_json().dump())));
  return buf;
}

std::uint64_t row_seed(std::uint64_t seed, const std::string& id) { return seed ^ fnv1a(id); }

int TableResult::passed() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const RowResult& r) { return r.pass; }));
}

void parallel_for(int count, int threads, const std::function<void(int)>& job) {
  int workers = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

TableResult verify_table(const Catalog& cat, int table, const RunConfig& config) {
  config.validate();
  TableResult out{table, {}};
  switch (table) {
    case 1: {
      nlohmann::json expect = read_json_file(path_in(config, "expectations.json"));
      out.rows = run_rows(cat.table(1), config, [&](const Family* f) { return table1_row(cat, *f, expect, config); });
      break;
    }
    case 2:
    case 3: {
      auto displays = load_witness_displays(path_in(config, "witnesses.json"));
      out.rows = run_rows(cat.table(table), config,
                          [&](const Family* f) { return identity_row(cat, table, *f, displays, config); });
      break;
    }
    case 4: {
      nlohmann::json expect = read_json_file(path_in(config, "expectations.json"));
      out.rows = run_rows(cat.table(4), config, [&](const Family* f) { return table4_row(cat, *f, expect, config); });
      break;
    }
    case 5:
    case 7: {
      auto ws = load_witnesses(path_in(config, table == 5 ? "table5.json" : "table7.json"));
      if (table == 7)
        for (auto& w : load_witnesses(path_in(config, "limits.json"))) ws.push_back(std::move(w));
      out.rows = run_rows(ws, config, [&](const DegenerationWitness& w) { return witness_row(cat, table, w, config); });
      break;
    }
    case 6:
    case 8: {
      auto sets = load_separating_sets(path_in(config, table == 6 ? "table6.json" : "table8.json"));
      out.rows = run_rows(sets, config, [&](const SeparatingSet& s) { return separating_row(cat, table, s, config); });
      break;
    }
    default:
      throw Error("no table " + std::to_string(table) + "; tables are 1 to 8");
  }
  if (out.rows.empty()) throw Error("table " + std::to_string(table) + " has no rows");
  return out;
}

std::vector<CheckedWitness> checked_witnesses(const Catalog& cat, const RunConfig& config, bool trust) {
  std::vector<DegenerationWitness> ws;
  for (const char* file : {"table5.json", "table7.json", "limits.json"})
    for (auto& w : load_witnesses(path_in(config, file))) ws.push_back(std::move(w));
  for (const Family* f : cat.table(4)) ws.push_back(zero_witness(f->name, f->dim));
  std::vector<CheckedWitness> out(ws.size());
  parallel_for(static_cast<int>(ws.size()), config.threads, [&](int i) {
    out[i].witness = ws[i];
    out[i].verified = trust || verify_degeneration(cat, ws[i], config.groebner).verified;
  });
  return out;
}

nlohmann::json report_json(const std::string& command, const RunConfig& config, nlohmann::json body) {
  nlohmann::json j = {{"command", command}, {"seed", config.seed}, {"config_hash", config.hash()},
                      {"config", config.to_json()}};
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
  return j;
}

}  // namespace algvar
