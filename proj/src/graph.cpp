#include "vsg/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace vsg {

void AbstractGraph::add_vertex(const std::string& v) {
  if (has_vertex(v)) throw std::invalid_argument("duplicate vertex: " + v);
  vertices_.push_back(v);
}

void AbstractGraph::add_edge(const std::string& id, const std::string& tail,
                             const std::string& head) {
  if (has_edge(id)) throw std::invalid_argument("duplicate edge: " + id);
  if (!has_vertex(tail)) throw std::invalid_argument("unknown tail vertex: " + tail);
  if (!has_vertex(head)) throw std::invalid_argument("unknown head vertex: " + head);
  edges_.push_back({id, tail, head});
}

bool AbstractGraph::has_vertex(const std::string& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool AbstractGraph::has_edge(const std::string& id) const {
  for (auto& e : edges_)
    if (e.id == id) return true;
  return false;
}

const GraphEdge& AbstractGraph::edge(const std::string& id) const {
  for (auto& e : edges_)
    if (e.id == id) return e;
  throw std::invalid_argument("unknown edge: " + id);
}

int AbstractGraph::degree(const std::string& v) const {
  int d = 0;
  for (auto& e : edges_) {
    if (e.tail == v) ++d;
    if (e.head == v) ++d;
  }
  return d;
}

std::vector<EndRef> AbstractGraph::incident_ends(const std::string& v) const {
  std::vector<EndRef> out;
  for (auto& e : edges_) {
    if (e.tail == v) out.push_back({e.id, false});
    if (e.head == v) out.push_back({e.id, true});
  }
  return out;
}

std::string AbstractGraph::end_vertex(const EndRef& e) const {
  const GraphEdge& ed = edge(e.edge);
  return e.at_head ? ed.head : ed.tail;
}

void AbstractGraph::set_rotation(const std::string& v, std::vector<EndRef> ends) {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex: " + v);
  if (!rotations_) rotations_.emplace();
  (*rotations_)[v] = std::move(ends);
}

const std::vector<EndRef>& AbstractGraph::rotation(const std::string& v) const {
  if (!rotations_) throw std::logic_error("graph has no rotations");
  auto it = rotations_->find(v);
  if (it == rotations_->end()) throw std::invalid_argument("no rotation at vertex: " + v);
  return it->second;
}

std::vector<std::string> AbstractGraph::validate() const {
  std::vector<std::string> out;
  {
    std::set<std::string> seen;
    for (auto& v : vertices_)
      if (!seen.insert(v).second) out.push_back("duplicate vertex id: " + v);
  }
  {
    std::set<std::string> seen;
    for (auto& e : edges_) {
      if (!seen.insert(e.id).second) out.push_back("duplicate edge id: " + e.id);
      if (!has_vertex(e.tail))
        out.push_back("edge " + e.id + " has unknown tail: " + e.tail);
      if (!has_vertex(e.head))
        out.push_back("edge " + e.id + " has unknown head: " + e.head);
    }
  }
  if (rotations_) {
    for (auto& v : vertices_) {
      auto it = rotations_->find(v);
      if (it == rotations_->end()) {
        out.push_back("missing rotation at vertex: " + v);
        continue;
      }
      std::multiset<EndRef> want;
      for (auto& e : incident_ends(v)) want.insert(e);
      std::multiset<EndRef> got(it->second.begin(), it->second.end());
      if (want != got)
        out.push_back("rotation at vertex " + v + " does not list its incident ends");
    }
    for (auto& [v, ends] : *rotations_) {
      (void)ends;
      if (!has_vertex(v)) out.push_back("rotation at unknown vertex: " + v);
    }
  }
  return out;
}

AbstractGraph AbstractGraph::delete_edge(const std::string& id) const {
  edge(id);
  AbstractGraph g;
  g.vertices_ = vertices_;
  for (auto& e : edges_)
    if (e.id != id) g.edges_.push_back(e);
  if (rotations_) {
    g.rotations_.emplace();
    for (auto& [v, ends] : *rotations_) {
      std::vector<EndRef> kept;
      for (auto& end : ends)
        if (end.edge != id) kept.push_back(end);
      (*g.rotations_)[v] = kept;
    }
  }
  return g;
}

namespace {

// Cyclic list with the element at position p removed, starting just after p.
std::vector<EndRef> cut_after(const std::vector<EndRef>& ends, std::size_t p) {
  std::vector<EndRef> out;
  std::size_t n = ends.size();
  for (std::size_t i = 1; i < n; ++i) out.push_back(ends[(p + i) % n]);
  return out;
}

}  // namespace

AbstractGraph AbstractGraph::contract_edge(const std::string& id) const {
  const GraphEdge e = edge(id);
  if (e.is_loop()) throw std::invalid_argument("cannot contract loop: " + id);
  const std::string keep = e.tail;
  const std::string gone = e.head;

  AbstractGraph g;
  for (auto& v : vertices_)
    if (v != gone) g.vertices_.push_back(v);
  for (auto& ed : edges_) {
    if (ed.id == id) continue;
    GraphEdge ne = ed;
    if (ne.tail == gone) ne.tail = keep;
    if (ne.head == gone) ne.head = keep;
    g.edges_.push_back(ne);
  }
  if (rotations_) {
    g.rotations_.emplace();
    for (auto& v : g.vertices_) {
      if (v != keep) {
        (*g.rotations_)[v] = rotations_->at(v);
        continue;
      }
      const auto& ru = rotations_->at(keep);
      const auto& rw = rotations_->at(gone);
      auto pu = std::find(ru.begin(), ru.end(), EndRef{id, false}) - ru.begin();
      auto pw = std::find(rw.begin(), rw.end(), EndRef{id, true}) - rw.begin();
      std::vector<EndRef> merged;
      // Walk u's rotation from just after the contracted end; at its slot,
      // splice in w's rotation cut the same way.
      auto tail_part = cut_after(ru, static_cast<std::size_t>(pu));
      auto head_part = cut_after(rw, static_cast<std::size_t>(pw));
      merged.insert(merged.end(), head_part.begin(), head_part.end());
      merged.insert(merged.end(), tail_part.begin(), tail_part.end());
      (*g.rotations_)[keep] = merged;
    }
  }
  return g;
}

std::optional<int> AbstractGraph::bouquet_size() const {
  if (vertices_.size() != 1) return std::nullopt;
  for (auto& e : edges_)
    if (!e.is_loop()) return std::nullopt;
  return static_cast<int>(edges_.size());
}

int AbstractGraph::component_count() const {
  std::map<std::string, std::string> parent;
  for (auto& v : vertices_) parent[v] = v;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    std::string r = x;
    while (parent[r] != r) r = parent[r];
    return r;
  };
  for (auto& e : edges_) parent[find(e.tail)] = find(e.head);
  std::set<std::string> roots;
  for (auto& v : vertices_) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

int AbstractGraph::betti() const {
  return edge_count() - vertex_count() + component_count();
}

std::vector<std::string> Cycle::edge_ids_sorted() const {
  std::vector<std::string> ids;
  for (auto& s : steps) ids.push_back(s.edge);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::string> Cycle::vertex_list(const AbstractGraph& g) const {
  std::vector<std::string> out;
  for (auto& s : steps) {
    const GraphEdge& e = g.edge(s.edge);
    out.push_back(s.forward ? e.tail : e.head);
  }
  return out;
}

std::vector<Cycle> simple_cycles(const AbstractGraph& g) {
  std::vector<Cycle> out;
  std::set<std::vector<std::string>> seen;

  auto emit = [&](const Cycle& c) {
    if (seen.insert(c.edge_ids_sorted()).second) out.push_back(c);
  };

  for (auto& e : g.edges())
    if (e.is_loop()) emit(Cycle{{{e.id, true}}});

  // Paths from a start vertex using only vertices at or after it in stored
  // order; a vertex-simple cycle is determined by its edge set, so duplicates
  // from direction or rotation of the walk collapse in `seen`.
  const auto& vs = g.vertices();
  std::map<std::string, int> vindex;
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) vindex[vs[i]] = i;

  std::vector<GraphEdge> plain;
  for (auto& e : g.edges())
    if (!e.is_loop()) plain.push_back(e);

  for (int s = 0; s < static_cast<int>(vs.size()); ++s) {
    const std::string& start = vs[s];
    std::vector<Cycle::Step> path;
    std::set<std::string> used_edges;
    std::set<std::string> visited{start};

    std::function<void(const std::string&)> dfs = [&](const std::string& at) {
      for (auto& e : plain) {
        if (used_edges.count(e.id)) continue;
        bool fwd;
        if (e.tail == at) fwd = true;
        else if (e.head == at) fwd = false;
        else continue;
        const std::string& to = fwd ? e.head : e.tail;
        if (vindex[to] < s) continue;
        if (to == start) {
          if (path.size() >= 1) {
            Cycle c;
            c.steps = path;
            c.steps.push_back({e.id, fwd});
            emit(c);
          }
          continue;
        }
        if (visited.count(to)) continue;
        path.push_back({e.id, fwd});
        used_edges.insert(e.id);
        visited.insert(to);
        dfs(to);
        visited.erase(to);
        used_edges.erase(e.id);
        path.pop_back();
      }
    };
    dfs(start);
  }

  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    auto ka = a.edge_ids_sorted(), kb = b.edge_ids_sorted();
    if (ka.size() != kb.size()) return ka.size() < kb.size();
    return ka < kb;
  });
  return out;
}

std::vector<CyclePair> disjoint_cycle_pairs(const AbstractGraph& g) {
  std::vector<Cycle> cycles = simple_cycles(g);
  std::vector<std::set<std::string>> verts;
  for (auto& c : cycles) {
    auto vl = c.vertex_list(g);
    verts.emplace_back(vl.begin(), vl.end());
  }
  std::vector<CyclePair> out;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      bool disjoint = true;
      for (auto& v : verts[i])
        if (verts[j].count(v)) {
          disjoint = false;
          break;
        }
      if (disjoint) out.push_back({cycles[i], cycles[j]});
    }
  return out;
}

}  // namespace vsg
