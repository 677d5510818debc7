#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vsg {

// One end of an edge: the tail end (at_head == false) or the head end.
struct EndRef {
  std::string edge;
  bool at_head = false;
  auto operator<=>(const EndRef&) const = default;
};

struct GraphEdge {
  std::string id;
  std::string tail;
  std::string head;
  bool is_loop() const { return tail == head; }
  bool operator==(const GraphEdge&) const = default;
};

// Finite undirected multigraph with loops. Edges carry an orientation
// (tail -> head) used for passage lists and rotation ends; the graph itself is
// undirected. Vertex and edge order is insertion order and is preserved by all
// operations. Rotations, when present, give a cyclic order of incident ends at
// every vertex.
class AbstractGraph {
public:
  void add_vertex(const std::string& v);
  void add_edge(const std::string& id, const std::string& tail, const std::string& head);

  bool has_vertex(const std::string& v) const;
  bool has_edge(const std::string& id) const;
  const GraphEdge& edge(const std::string& id) const;
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Loops contribute 2.
  int degree(const std::string& v) const;
  // Ends incident to v in edge-list order, tail end before head end; a loop
  // contributes both ends.
  std::vector<EndRef> incident_ends(const std::string& v) const;
  std::string end_vertex(const EndRef& e) const;

  bool has_rotations() const { return rotations_.has_value(); }
  void set_rotation(const std::string& v, std::vector<EndRef> ends);
  void clear_rotations() { rotations_.reset(); }
  // Precondition: has_rotations(). Cyclic order of ends at v.
  const std::vector<EndRef>& rotation(const std::string& v) const;

  // Empty when well formed. Checks endpoint existence, id uniqueness, and that
  // each rotation lists exactly the incident ends of its vertex, every vertex
  // having one when rotations are present.
  std::vector<std::string> validate() const;

  AbstractGraph delete_edge(const std::string& id) const;
  // Merges head into tail, keeping the tail vertex's name; rotations are
  // spliced at the removed ends. Precondition: id names a non-loop edge.
  AbstractGraph contract_edge(const std::string& id) const;

  // Number of loops if the graph is a single vertex with only loops.
  std::optional<int> bouquet_size() const;

  int component_count() const;
  // First Betti number: E - V + #components.
  int betti() const;

  bool operator==(const AbstractGraph&) const = default;

private:
  std::vector<std::string> vertices_;
  std::vector<GraphEdge> edges_;
  std::optional<std::map<std::string, std::vector<EndRef>>> rotations_;
};

// Vertex-simple closed walk, recorded as edge steps with traversal direction.
struct Cycle {
  struct Step {
    std::string edge;
    bool forward = true;
    auto operator<=>(const Step&) const = default;
  };
  std::vector<Step> steps;

  std::vector<std::string> edge_ids_sorted() const;
  // Vertices entered along the walk, starting vertex first.
  std::vector<std::string> vertex_list(const AbstractGraph& g) const;
  auto operator<=>(const Cycle&) const = default;
};

struct CyclePair {
  Cycle first;
  Cycle second;
  auto operator<=>(const CyclePair&) const = default;
};

// All vertex-simple cycles (loops included), each once regardless of starting
// point or direction. Deterministic order and representatives.
std::vector<Cycle> simple_cycles(const AbstractGraph& g);

// Unordered pairs of vertex-disjoint simple cycles, deterministically ordered.
std::vector<CyclePair> disjoint_cycle_pairs(const AbstractGraph& g);

}  // namespace vsg
