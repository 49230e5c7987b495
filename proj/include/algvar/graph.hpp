#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "algvar/catalog.hpp"
#include "algvar/deformation.hpp"

namespace algvar {

enum class NodeKind { point, family, instance };

/// Node ids: "T09", "k2", "T07(*)" for a whole family, "T07(3/2)" for an instance.
struct GraphNode {
  std::string id;
  NodeKind kind = NodeKind::point;
  std::string family;
  Assignment args;  // instance parameters
  int level = 0;    // dim Der, at a sampled point for family nodes
};

enum class EdgeKind { witness, member };

struct GraphEdge {
  std::string from, to;
  EdgeKind kind = EdgeKind::witness;
  std::string witness;
  bool uniform = true;  // false when the witness moves a parameter
};

class UnverifiedEdge : public Error {
 public:
  using Error::Error;
};

class DegenerationGraph {
 public:
  void add_node(GraphNode node);
  void add_edge(GraphEdge edge);

  bool has_node(const std::string& id) const { return index_.count(id) != 0; }
  const GraphNode& node(const std::string& id) const;
  const std::vector<GraphNode>& nodes() const { return nodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  /// Reachable set including the node itself.
  std::set<std::string> closure(const std::string& id) const;
  /// Closure without the family's own instances, as in the closure table.
  std::set<std::string> closure_description(const std::string& id) const;
  /// Nodes not contained in the closure of any other node.
  std::vector<std::string> maximal() const;

 private:
  std::vector<GraphNode> nodes_;
  std::map<std::string, std::size_t> index_;
  std::vector<GraphEdge> edges_;
};

struct CheckedWitness {
  DegenerationWitness witness;
  bool verified = false;
};

std::string instance_id(const std::string& family, const Assignment& args);

/// Builds the graph from verified witnesses. Uniform witnesses out of a family
/// are copied to each of its instance nodes; member edges join a family to its
/// instances. Throws UnverifiedEdge on an unverified witness.
DegenerationGraph build_graph(const Catalog& cat, const std::vector<CheckedWitness>& witnesses,
                              std::uint64_t seed = 1);

struct LabeledEdge {
  std::string from, to, label;
  auto operator<=>(const LabeledEdge&) const = default;
};

/// Figure 1: instance nodes collapse onto their family with a parameter label,
/// only parameter-free witnesses are kept, and the result is transitively reduced.
std::vector<LabeledEdge> primary_degenerations(const DegenerationGraph& g);

/// Figure 2: Hasse diagram of closure inclusion.
std::vector<std::pair<std::string, std::string>> closure_lattice(const DegenerationGraph& g);

/// Maximal nodes of largest orbit dimension n^2 - level.
std::vector<std::string> open_orbit_check(const DegenerationGraph& g, int n = 2);

std::string to_dot(const std::vector<LabeledEdge>& edges, const std::map<std::string, int>& levels = {},
                   const std::string& name = "degenerations");
std::vector<LabeledEdge> parse_dot(const std::string& text);

std::vector<LabeledEdge> labeled_edges_from_json(const nlohmann::json& j);
nlohmann::json labeled_edges_to_json(const std::vector<LabeledEdge>& edges);

}  // namespace algvar
