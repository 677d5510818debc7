#include "vsg/gauss_code.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vsg {

const std::vector<Passage>& GaussCode::passages_on(const std::string& edge) const {
  static const std::vector<Passage> empty;
  auto it = passages.find(edge);
  return it == passages.end() ? empty : it->second;
}

int GaussCode::sign_of(int crossing) const {
  auto it = signs.find(crossing);
  if (it == signs.end()) throw std::invalid_argument("no sign for crossing " + std::to_string(crossing));
  return it->second;
}

const std::vector<int>& ShadowCode::passages_on(const std::string& edge) const {
  static const std::vector<int> empty;
  auto it = passages.find(edge);
  return it == passages.end() ? empty : it->second;
}

std::vector<std::string> validate(const GaussCode& code) {
  std::vector<std::string> out = code.graph.validate();
  for (auto& [e, ps] : code.passages) {
    (void)ps;
    if (!code.graph.has_edge(e)) out.push_back("passages on unknown edge: " + e);
  }
  std::map<int, int> overs, unders;
  for (auto& e : code.graph.edges())
    for (auto& p : code.passages_on(e.id)) {
      if (p.crossing <= 0)
        out.push_back("crossing ids must be positive: " + std::to_string(p.crossing));
      (p.role == StrandRole::over ? overs : unders)[p.crossing]++;
    }
  std::set<int> ids;
  for (auto& [c, n] : overs) (void)n, ids.insert(c);
  for (auto& [c, n] : unders) (void)n, ids.insert(c);
  for (int c : ids) {
    if (overs[c] != 1 || unders[c] != 1)
      out.push_back("crossing " + std::to_string(c) + " needs exactly one over and one under passage, has " +
                    std::to_string(overs[c]) + "/" + std::to_string(unders[c]));
    auto it = code.signs.find(c);
    if (it == code.signs.end())
      out.push_back("crossing " + std::to_string(c) + " has no sign");
    else if (it->second != 1 && it->second != -1)
      out.push_back("crossing " + std::to_string(c) + " has sign outside {+1,-1}");
  }
  for (auto& [c, s] : code.signs) {
    (void)s;
    if (!ids.count(c)) out.push_back("sign for unmet crossing " + std::to_string(c));
  }
  return out;
}

std::vector<std::string> validate(const ShadowCode& code) {
  std::vector<std::string> out = code.graph.validate();
  for (auto& [e, ps] : code.passages) {
    (void)ps;
    if (!code.graph.has_edge(e)) out.push_back("passages on unknown edge: " + e);
  }
  std::map<int, int> met;
  for (auto& e : code.graph.edges())
    for (int c : code.passages_on(e.id)) {
      if (c <= 0) out.push_back("crossing ids must be positive: " + std::to_string(c));
      met[c]++;
    }
  for (auto& [c, n] : met)
    if (n != 2)
      out.push_back("crossing " + std::to_string(c) + " met " + std::to_string(n) + " times, expected 2");
  return out;
}

ShadowCode shadow(const GaussCode& code) {
  ShadowCode s;
  s.graph = code.graph;
  for (auto& [e, ps] : code.passages) {
    std::vector<int> w;
    for (auto& p : ps) w.push_back(p.crossing);
    s.passages[e] = w;
  }
  return s;
}

std::vector<int> crossing_ids(const GaussCode& code) {
  std::set<int> ids;
  for (auto& [e, ps] : code.passages) {
    (void)e;
    for (auto& p : ps) ids.insert(p.crossing);
  }
  return {ids.begin(), ids.end()};
}

std::vector<int> crossing_ids(const ShadowCode& code) {
  std::set<int> ids;
  for (auto& [e, ps] : code.passages) {
    (void)e;
    for (int c : ps) ids.insert(c);
  }
  return {ids.begin(), ids.end()};
}

int crossing_count(const GaussCode& code) {
  return static_cast<int>(crossing_ids(code).size());
}

int writhe(const GaussCode& code) {
  int w = 0;
  for (auto& [c, s] : code.signs) (void)c, w += s;
  return w;
}

std::map<int, std::array<PassageLoc, 2>> passage_locations(const GaussCode& code) {
  std::map<int, std::array<PassageLoc, 2>> out;
  std::map<int, int> seen;
  for (auto& e : code.graph.edges()) {
    const auto& ps = code.passages_on(e.id);
    for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
      int c = ps[i].crossing;
      int k = seen[c]++;
      if (k < 2) out[c][k] = {e.id, i};
    }
  }
  return out;
}

GaussCode relabel_crossings(const GaussCode& code, const std::map<int, int>& f) {
  GaussCode out;
  out.graph = code.graph;
  for (auto& [e, ps] : code.passages) {
    std::vector<Passage> w;
    for (auto& p : ps) w.push_back({f.at(p.crossing), p.role});
    out.passages[e] = w;
  }
  for (auto& [c, s] : code.signs) out.signs[f.at(c)] = s;
  return out;
}

std::vector<std::string> component_vertices(const AbstractGraph& g, const std::string& v) {
  std::set<std::string> comp{v};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto& e : g.edges()) {
      bool t = comp.count(e.tail), h = comp.count(e.head);
      if (t != h) {
        comp.insert(t ? e.head : e.tail);
        grew = true;
      }
    }
  }
  std::vector<std::string> out;
  for (auto& u : g.vertices())
    if (comp.count(u)) out.push_back(u);
  return out;
}

std::optional<Cycle> component_as_cycle(const AbstractGraph& g, const std::string& v) {
  auto comp = component_vertices(g, v);
  std::set<std::string> in_comp(comp.begin(), comp.end());
  std::vector<GraphEdge> comp_edges;
  for (auto& e : g.edges())
    if (in_comp.count(e.tail)) comp_edges.push_back(e);
  for (auto& u : comp)
    if (g.degree(u) != 2) return std::nullopt;
  if (comp_edges.size() != comp.size()) return std::nullopt;

  Cycle c;
  std::set<std::string> used;
  std::string at = comp[0];
  while (used.size() < comp_edges.size()) {
    bool advanced = false;
    for (auto& e : comp_edges) {
      if (used.count(e.id)) continue;
      bool fwd;
      if (e.tail == at) fwd = true;
      else if (e.head == at) fwd = false;
      else continue;
      c.steps.push_back({e.id, fwd});
      used.insert(e.id);
      at = fwd ? e.head : e.tail;
      advanced = true;
      break;
    }
    if (!advanced) return std::nullopt;
  }
  if (at != comp[0]) return std::nullopt;
  return c;
}

std::optional<KnotView> knot_view(const GaussCode& code) {
  const auto& g = code.graph;
  if (g.vertex_count() == 0) return std::nullopt;
  auto cyc = component_as_cycle(g, g.vertices()[0]);
  if (!cyc) return std::nullopt;
  if (static_cast<int>(cyc->steps.size()) != g.edge_count()) return std::nullopt;

  KnotView kv;
  std::map<std::string, int> dir;
  for (auto& s : cyc->steps) {
    dir[s.edge] = s.forward ? 1 : -1;
    auto ps = code.passages_on(s.edge);
    if (!s.forward) std::reverse(ps.begin(), ps.end());
    kv.seq.insert(kv.seq.end(), ps.begin(), ps.end());
  }
  auto locs = passage_locations(code);
  for (auto& [c, loc] : locs)
    kv.sign[c] = code.sign_of(c) * dir.at(loc[0].edge) * dir.at(loc[1].edge);
  return kv;
}

}  // namespace vsg
