#include "vsg/yamada.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "vsg/realizability.hpp"

namespace vsg {

namespace {

std::string fresh_vertex(const AbstractGraph& g, std::string base) {
  while (g.has_vertex(base)) base += "'";
  return base;
}

std::string fresh_edge(const AbstractGraph& g, std::string base) {
  while (g.has_edge(base)) base += "'";
  return base;
}

bool has_bridge(const AbstractGraph& g) {
  std::map<std::string, std::vector<std::pair<std::string, int>>> adj;
  int idx = 0;
  for (auto& e : g.edges()) {
    if (!e.is_loop()) {
      adj[e.tail].push_back({e.head, idx});
      adj[e.head].push_back({e.tail, idx});
    }
    ++idx;
  }
  std::map<std::string, int> disc, low;
  int timer = 0;
  bool found = false;
  std::function<void(const std::string&, int)> dfs = [&](const std::string& u, int pe) {
    disc[u] = low[u] = timer++;
    for (auto& [w, ei] : adj[u]) {
      if (ei == pe) continue;
      if (!disc.count(w)) {
        dfs(w, ei);
        low[u] = std::min(low[u], low[w]);
        if (low[w] > disc[u]) found = true;
      } else {
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (auto& v : g.vertices())
    if (adj.count(v) && !disc.count(v)) dfs(v, -1);
  return found;
}

// Removes a degree-2 vertex, merging its two distinct edges into one.
AbstractGraph smooth_out(const AbstractGraph& g, const std::string& v) {
  auto ends = g.incident_ends(v);
  const auto& e1 = g.edge(ends[0].edge);
  const auto& e2 = g.edge(ends[1].edge);
  std::string a = ends[0].at_head ? e1.tail : e1.head;
  std::string b = ends[1].at_head ? e2.tail : e2.head;
  AbstractGraph out;
  for (auto& w : g.vertices())
    if (w != v) out.add_vertex(w);
  for (auto& e : g.edges())
    if (e.id != e1.id && e.id != e2.id) out.add_edge(e.id, e.tail, e.head);
  out.add_edge(fresh_edge(g, e1.id + "+" + e2.id), a, b);
  return out;
}

Laurent flat_h(const AbstractGraph& g) {
  bool any_nonloop = false;
  std::string nle;
  for (auto& e : g.edges())
    if (!e.is_loop()) {
      any_nonloop = true;
      nle = e.id;
      break;
    }
  if (!any_nonloop) {
    std::map<std::string, int> loops;
    for (auto& v : g.vertices()) loops[v] = 0;
    for (auto& e : g.edges()) ++loops[e.tail];
    Laurent ms = -Laurent::sigma();
    Laurent out = Laurent::one();
    for (auto& [v, k] : loops) out = out * -ms.pow(k);
    return out;
  }
  if (has_bridge(g)) return Laurent::zero();
  for (auto& v : g.vertices()) {
    if (g.degree(v) != 2) continue;
    auto ends = g.incident_ends(v);
    if (ends[0].edge == ends[1].edge) continue;
    return flat_h(smooth_out(g, v));
  }
  for (auto& e : g.edges())
    if (e.is_loop()) return -Laurent::sigma() * flat_h(g.delete_edge(e.id));
  return flat_h(g.contract_edge(nle)) + flat_h(g.delete_edge(nle));
}

// Replaces crossing c by one of its three resolutions. Mode 0 joins the
// strands respecting edge directions, mode 1 joins them against one of the
// directions (reversing a piece and flipping signs of crossings met an odd
// number of times on it), mode 2 replaces the crossing by a 4-valent vertex.
GaussCode resolve(const GaussCode& g, int c, int mode) {
  auto loc = passage_locations(g).at(c);
  const std::string e1 = loc[0].edge, e2 = loc[1].edge;
  const int i1 = loc[0].index, i2 = loc[1].index;

  GaussCode out;
  for (auto& v : g.graph.vertices()) out.graph.add_vertex(v);
  for (auto& [k, s] : g.signs)
    if (k != c) out.signs[k] = s;

  std::map<int, int> flips;
  auto seg = [&](const std::string& e, int from, int to) {
    const auto& P = g.passages_on(e);
    return std::vector<Passage>(P.begin() + from, P.begin() + to);
  };
  auto rev = [&](std::vector<Passage> w) {
    std::reverse(w.begin(), w.end());
    for (auto& p : w) ++flips[p.crossing];
    return w;
  };
  auto cat = [](std::vector<Passage> a, const std::vector<Passage>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  struct NewEdge {
    std::string id, tail, head;
    std::vector<Passage> ps;
  };
  std::map<std::string, std::vector<NewEdge>> replaced;

  if (e1 == e2) {
    const auto& E = g.graph.edge(e1);
    int n = static_cast<int>(g.passages_on(e1).size());
    auto A = seg(e1, 0, i1), M = seg(e1, i1 + 1, i2), Z = seg(e1, i2 + 1, n);
    if (mode == 0) {
      std::string w = fresh_vertex(g.graph, "_o" + std::to_string(c));
      out.graph.add_vertex(w);
      replaced[e1] = {{e1, E.tail, E.head, cat(A, Z)},
                      {fresh_edge(g.graph, "_l" + std::to_string(c)), w, w, M}};
    } else if (mode == 1) {
      replaced[e1] = {{e1, E.tail, E.head, cat(cat(A, rev(M)), Z)}};
    } else {
      std::string x = fresh_vertex(g.graph, "_x" + std::to_string(c));
      out.graph.add_vertex(x);
      replaced[e1] = {{fresh_edge(g.graph, e1 + ":a"), E.tail, x, A},
                      {fresh_edge(g.graph, e1 + ":b"), x, x, M},
                      {fresh_edge(g.graph, e1 + ":c"), x, E.head, Z}};
    }
  } else {
    const auto& E1 = g.graph.edge(e1);
    const auto& E2 = g.graph.edge(e2);
    int n1 = static_cast<int>(g.passages_on(e1).size());
    int n2 = static_cast<int>(g.passages_on(e2).size());
    auto A1 = seg(e1, 0, i1), Z1 = seg(e1, i1 + 1, n1);
    auto A2 = seg(e2, 0, i2), Z2 = seg(e2, i2 + 1, n2);
    if (mode == 0) {
      replaced[e1] = {{e1, E1.tail, E2.head, cat(A1, Z2)}};
      replaced[e2] = {{e2, E2.tail, E1.head, cat(A2, Z1)}};
    } else if (mode == 1) {
      replaced[e1] = {{e1, E1.tail, E2.tail, cat(A1, rev(A2))}};
      replaced[e2] = {{e2, E1.head, E2.head, cat(rev(Z1), Z2)}};
    } else {
      std::string x = fresh_vertex(g.graph, "_x" + std::to_string(c));
      out.graph.add_vertex(x);
      replaced[e1] = {{fresh_edge(g.graph, e1 + ":a"), E1.tail, x, A1},
                      {fresh_edge(g.graph, e1 + ":b"), x, E1.head, Z1}};
      replaced[e2] = {{fresh_edge(g.graph, e2 + ":a"), E2.tail, x, A2},
                      {fresh_edge(g.graph, e2 + ":b"), x, E2.head, Z2}};
    }
  }

  for (auto& e : g.graph.edges()) {
    auto it = replaced.find(e.id);
    if (it == replaced.end()) {
      out.graph.add_edge(e.id, e.tail, e.head);
      const auto& ps = g.passages_on(e.id);
      if (!ps.empty()) out.passages[e.id] = ps;
    } else {
      for (auto& ne : it->second) {
        out.graph.add_edge(ne.id, ne.tail, ne.head);
        if (!ne.ps.empty()) out.passages[ne.id] = ne.ps;
      }
    }
  }
  for (auto& [k, cnt] : flips)
    if (cnt % 2) out.signs[k] = -out.signs[k];
  return out;
}

}  // namespace

Laurent yamada_flat(const AbstractGraph& g) {
  auto bad = g.validate();
  if (!bad.empty()) throw std::invalid_argument("invalid graph: " + bad.front());
  return flat_h(g);
}

Laurent yamada(const GaussCode& code, const YamadaOptions& opt) {
  auto bad = validate(code);
  if (!bad.empty()) throw std::invalid_argument("invalid code: " + bad.front());
  auto ids = crossing_ids(code);
  if (static_cast<int>(ids.size()) > opt.max_crossings)
    throw BudgetError("crossing count exceeds the resolution budget");
  std::vector<int> order = ids;
  if (opt.resolve_seed != 0) {
    std::mt19937 rng(opt.resolve_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::function<Laurent(const GaussCode&, std::size_t)> go =
      [&](const GaussCode& st, std::size_t next) -> Laurent {
    std::size_t k = next;
    while (k < order.size() && !st.signs.count(order[k])) ++k;
    if (k == order.size()) return flat_h(st.graph);
    int c = order[k];
    int s = st.sign_of(c);
    return Laurent::monomial(s, 1) * go(resolve(st, c, 0), k + 1) +
           Laurent::monomial(-s, 1) * go(resolve(st, c, 1), k + 1) +
           go(resolve(st, c, 2), k + 1);
  };
  return go(code, 0);
}

}  // namespace vsg
