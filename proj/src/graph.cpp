#include "algvar/graph.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <sstream>

#include "algvar/invariants.hpp"

namespace algvar {

void DegenerationGraph::add_node(GraphNode node) {
  if (has_node(node.id)) return;
  index_[node.id] = nodes_.size();
  nodes_.push_back(std::move(node));
}

void DegenerationGraph::add_edge(GraphEdge edge) {
  if (!has_node(edge.from) || !has_node(edge.to))
    throw Error("edge " + edge.from + " -> " + edge.to + " references an unknown node");
  for (const auto& e : edges_)
    if (e.from == edge.from && e.to == edge.to && e.kind == edge.kind && e.uniform == edge.uniform) return;
  edges_.push_back(std::move(edge));
}

const GraphNode& DegenerationGraph::node(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error("unknown graph node " + id);
  return nodes_[it->second];
}

std::set<std::string> DegenerationGraph::closure(const std::string& id) const {
  node(id);
  std::set<std::string> seen{id};
  std::deque<std::string> queue{id};
  while (!queue.empty()) {
    std::string u = queue.front();
    queue.pop_front();
    for (const auto& e : edges_)
      if (e.from == u && seen.insert(e.to).second) queue.push_back(e.to);
  }
  return seen;
}

std::set<std::string> DegenerationGraph::closure_description(const std::string& id) const {
  std::set<std::string> out = closure(id);
  const GraphNode& n = node(id);
  if (n.kind != NodeKind::family) return out;
  for (const auto& e : edges_)
    if (e.from == id && e.kind == EdgeKind::member) out.erase(e.to);
  return out;
}

std::vector<std::string> DegenerationGraph::maximal() const {
  std::vector<std::string> out;
  for (const auto& n : nodes_) {
    bool inside = false;
    for (const auto& m : nodes_)
      if (m.id != n.id && closure(m.id).count(n.id) && !closure(n.id).count(m.id)) inside = true;
    if (!inside) out.push_back(n.id);
  }
  return out;
}

std::string instance_id(const std::string& family, const Assignment& args) {
  if (args.empty()) return family;
  std::string s = family + "(";
  bool first = true;
  for (const auto& [k, v] : args) {
    s += (first ? "" : ",") + v.to_string();
    first = false;
  }
  return s + ")";
}

namespace {

std::string family_id(const std::string& family) { return family + "(*)"; }

bool has_params(const Catalog& cat, const std::string& family) {
  return family != kZeroAlgebra && !cat.get(family).params.empty();
}

int level_of(const Catalog& cat, const std::string& family, const Assignment& args, std::uint64_t seed) {
  if (family == kZeroAlgebra) return derivation_algebra_dim(zero_algebra(2));
  const Family& f = cat.get(family);
  Assignment at = args;
  if (at.empty() && !f.params.empty()) at = cat.sample(f, 1, seed).front();
  return derivation_algebra_dim(cat.instantiate(f, at));
}

std::string label_of(const GraphNode& n) {
  std::string s;
  for (const auto& [k, v] : n.args) s += (s.empty() ? "" : ",") + k + "=" + v.to_string();
  return s;
}

}  // namespace

DegenerationGraph build_graph(const Catalog& cat, const std::vector<CheckedWitness>& witnesses, std::uint64_t seed) {
  if (witnesses.empty()) throw Error("no verified degenerations to build a graph from");
  DegenerationGraph g;
  auto ensure_point = [&](const std::string& family) {
    if (has_params(cat, family)) {
      std::string id = family_id(family);
      g.add_node({id, NodeKind::family, family, {}, level_of(cat, family, {}, seed)});
      return id;
    }
    g.add_node({family, NodeKind::point, family, {}, level_of(cat, family, {}, seed)});
    return family;
  };
  auto ensure_target = [&](const FamilyRef& ref) {
    if (!has_params(cat, ref.family)) return ensure_point(ref.family);
    const Family& f = cat.get(ref.family);
    Assignment args;
    for (const auto& p : f.params) {
      auto it = ref.args.find(p);
      if (it == ref.args.end()) throw Error("target " + ref.family + " needs a value for " + p);
      args[p] = eval_expr(it->second, {});
    }
    std::string fam = ensure_point(ref.family);
    std::string id = instance_id(ref.family, args);
    g.add_node({id, NodeKind::instance, ref.family, args, level_of(cat, ref.family, args, seed)});
    g.add_edge({fam, id, EdgeKind::member, "", true});
    return id;
  };

  for (const auto& cw : witnesses) {
    if (!cw.verified) throw UnverifiedEdge("witness " + cw.witness.id + " is not verified");
    const auto& w = cw.witness;
    std::string from = ensure_point(w.source);
    std::string to = ensure_target(w.target);
    g.add_edge({from, to, EdgeKind::witness, w.id, w.uniform()});
  }
  // Uniform witnesses hold at every instance of their source family.
  std::vector<GraphEdge> copies;
  for (const auto& n : g.nodes()) {
    if (n.kind != NodeKind::instance) continue;
    for (const auto& e : g.edges())
      if (e.from == family_id(n.family) && e.kind == EdgeKind::witness && e.uniform)
        copies.push_back({n.id, e.to, EdgeKind::witness, e.witness, true});
  }
  for (auto& e : copies) g.add_edge(std::move(e));
  return g;
}

std::vector<LabeledEdge> primary_degenerations(const DegenerationGraph& g) {
  std::set<LabeledEdge> collapsed;
  for (const auto& e : g.edges()) {
    if (e.kind != EdgeKind::witness || !e.uniform) continue;
    const GraphNode& a = g.node(e.from);
    const GraphNode& b = g.node(e.to);
    if (a.kind == NodeKind::instance) continue;
    collapsed.insert({a.family, b.family, b.kind == NodeKind::instance ? label_of(b) : ""});
  }
  std::map<std::string, std::set<std::string>> adj;
  for (const auto& e : collapsed)
    if (e.from != e.to) adj[e.from].insert(e.to);
  // Drop u -> v when v is reachable from u through another successor.
  auto reachable = [&](const std::string& start, const std::string& goal, const std::string& skip_first) {
    std::set<std::string> seen;
    std::deque<std::string> queue;
    for (const auto& s : adj[start])
      if (s != skip_first) {
        queue.push_back(s);
        seen.insert(s);
      }
    while (!queue.empty()) {
      std::string u = queue.front();
      queue.pop_front();
      if (u == goal) return true;
      for (const auto& v : adj[u])
        if (seen.insert(v).second) queue.push_back(v);
    }
    return false;
  };
  std::vector<LabeledEdge> out;
  for (const auto& e : collapsed)
    if (e.from != e.to && !reachable(e.from, e.to, e.to)) out.push_back(e);
  return out;
}

std::vector<std::pair<std::string, std::string>> closure_lattice(const DegenerationGraph& g) {
  std::map<std::string, std::set<std::string>> cl;
  for (const auto& n : g.nodes()) cl[n.id] = g.closure(n.id);
  auto strictly_inside = [&](const std::string& small, const std::string& big) {
    const auto& s = cl[small];
    const auto& b = cl[big];
    return s.size() < b.size() && std::includes(b.begin(), b.end(), s.begin(), s.end());
  };
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [x, cx] : cl)
    for (const auto& [y, cy] : cl) {
      if (!strictly_inside(y, x)) continue;
      bool covered = true;
      for (const auto& [z, cz] : cl)
        if (strictly_inside(y, z) && strictly_inside(z, x)) covered = false;
      if (covered) out.emplace_back(x, y);
    }
  return out;
}

std::vector<std::string> open_orbit_check(const DegenerationGraph& g, int n) {
  std::vector<std::string> out;
  if (g.nodes().empty()) return out;
  int best = -1;
  for (const auto& node : g.nodes()) best = std::max(best, n * n - node.level);
  for (const auto& id : g.maximal())
    if (n * n - g.node(id).level == best) out.push_back(id);
  return out;
}

std::string to_dot(const std::vector<LabeledEdge>& edges, const std::map<std::string, int>& levels,
                   const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (const auto& [id, level] : levels) os << "  \"" << id << "\" [label=\"" << id << "\\nlevel " << level << "\"];\n";
  for (const auto& e : edges) {
    os << "  \"" << e.from << "\" -> \"" << e.to << "\"";
    if (!e.label.empty()) os << " [label=\"" << e.label << "\", style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<LabeledEdge> parse_dot(const std::string& text) {
  static const std::regex edge_re(R"re("([^"]+)"\s*->\s*"([^"]+)"\s*(\[([^\]]*)\])?)re");
  static const std::regex label_re(R"re(label\s*=\s*"([^"]*)")re");
  std::vector<LabeledEdge> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), edge_re); it != std::sregex_iterator(); ++it) {
    LabeledEdge e{(*it)[1].str(), (*it)[2].str(), ""};
    std::string attrs = (*it)[4].str();
    std::smatch m;
    if (std::regex_search(attrs, m, label_re)) e.label = m[1].str();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<LabeledEdge> labeled_edges_from_json(const nlohmann::json& j) {
  std::vector<LabeledEdge> out;
  for (const auto& e : j.at("edges"))
    out.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(), e.value("label", std::string())});
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json labeled_edges_to_json(const std::vector<LabeledEdge>& edges) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : edges) {
    nlohmann::json j = {{"from", e.from}, {"to", e.to}};
    if (!e.label.empty()) j["label"] = e.label;
    arr.push_back(j);
  }
  return {{"edges", arr}};
}

}  // namespace algvar
