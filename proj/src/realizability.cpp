#include "vsg/realizability.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <iterator>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "vsg/planar_map.hpp"

namespace vsg {

namespace {

// Shadow constraint graph: one node per graph vertex, one per crossing.
// A vertex node's attachment points are its incident ends in canonical order;
// a crossing's points are 0 = strand-1 in, 1 = strand-1 out, 2 = strand-2 in,
// 3 = strand-2 out, strands numbered by scan order. Arcs join consecutive
// passages along each edge.
struct ShadowMap {
  struct Att {
    int node;
    int point;
  };

  std::vector<std::string> vnames;
  std::vector<int> xids;
  std::map<std::string, int> vnode;
  std::map<int, int> xnode;
  std::vector<std::vector<EndRef>> vertex_points;
  std::vector<std::array<Att, 2>> arcs;

  int node_count() const { return static_cast<int>(vnames.size() + xids.size()); }
  bool is_crossing(int n) const { return n >= static_cast<int>(vnames.size()); }
  int points_at(int n) const {
    return is_crossing(n) ? 4 : static_cast<int>(vertex_points[n].size());
  }
};

// The two strand interleavings at a crossing, as point orders.
const std::vector<int>& alternating_order(bool positive) {
  static const std::vector<int> pos{0, 2, 1, 3};
  static const std::vector<int> neg{0, 3, 1, 2};
  return positive ? pos : neg;
}

ShadowMap build_shadow_map(const ShadowCode& code) {
  ShadowMap sm;
  for (auto& v : code.graph.vertices()) {
    sm.vnode[v] = static_cast<int>(sm.vnames.size());
    sm.vnames.push_back(v);
    sm.vertex_points.push_back(code.graph.incident_ends(v));
  }
  sm.xids = crossing_ids(code);
  for (int c : sm.xids) sm.xnode[c] = static_cast<int>(sm.vnames.size() + sm.xnode.size());

  auto vertex_att = [&](const EndRef& end) {
    int n = sm.vnode.at(code.graph.end_vertex(end));
    const auto& pts = sm.vertex_points[n];
    int p = static_cast<int>(std::find(pts.begin(), pts.end(), end) - pts.begin());
    return ShadowMap::Att{n, p};
  };

  std::map<int, int> visits;
  for (auto& e : code.graph.edges()) {
    ShadowMap::Att prev = vertex_att({e.id, false});
    for (int c : code.passages_on(e.id)) {
      int s = visits[c]++;
      int xn = sm.xnode.at(c);
      sm.arcs.push_back({prev, {xn, 2 * s}});
      prev = {xn, 2 * s + 1};
    }
    sm.arcs.push_back({prev, vertex_att({e.id, true})});
  }
  return sm;
}

// Face-traces the shadow with the given point order per node.
RotationMap trace(const ShadowMap& sm, const std::vector<std::vector<int>>& point_order) {
  RotationMap rm;
  for (int n = 0; n < sm.node_count(); ++n) rm.add_node();
  std::vector<std::vector<int>> point_dart(sm.node_count());
  for (int n = 0; n < sm.node_count(); ++n) point_dart[n].assign(sm.points_at(n), -1);
  for (std::size_t a = 0; a < sm.arcs.size(); ++a) {
    rm.add_arc(sm.arcs[a][0].node, sm.arcs[a][1].node);
    point_dart[sm.arcs[a][0].node][sm.arcs[a][0].point] = static_cast<int>(2 * a);
    point_dart[sm.arcs[a][1].node][sm.arcs[a][1].point] = static_cast<int>(2 * a + 1);
  }
  for (int n = 0; n < sm.node_count(); ++n) {
    std::vector<int> darts;
    for (int p : point_order[n]) darts.push_back(point_dart[n][p]);
    rm.set_rotation(n, std::move(darts));
  }
  return rm;
}

void require_valid(const ShadowCode& code, Rigidity rig) {
  auto bad = validate(code);
  if (!bad.empty()) throw std::invalid_argument("invalid code: " + bad.front());
  if (rig == Rigidity::rigid && !code.graph.has_rotations())
    throw std::invalid_argument("rigid mode needs stored rotations");
}

std::vector<int> stored_rotation_points(const ShadowMap& sm, const ShadowCode& code, int n) {
  const auto& pts = sm.vertex_points[n];
  std::vector<int> order;
  for (auto& end : code.graph.rotation(sm.vnames[n]))
    order.push_back(static_cast<int>(std::find(pts.begin(), pts.end(), end) - pts.begin()));
  return order;
}

// Exact check that stored rotations hold with no per-vertex reflections: per
// component, try the stored rotations and their global reversal against every
// crossing interleaving. Returns nullopt when the assignment count is too big.
std::optional<bool> exact_coherent(const ShadowMap& sm, const ShadowCode& code) {
  constexpr long long kCap = 1 << 20;
  if (sm.node_count() == 0) return true;
  std::vector<std::vector<int>> base(sm.node_count());
  for (int n = 0; n < sm.node_count(); ++n) {
    if (sm.is_crossing(n)) base[n] = alternating_order(true);
    else base[n] = stored_rotation_points(sm, code, n);
  }
  auto comp = trace(sm, base).node_component();
  int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;

  std::vector<std::vector<int>> comp_xnodes(ncomp);
  for (int n = 0; n < sm.node_count(); ++n)
    if (sm.is_crossing(n)) comp_xnodes[comp[n]].push_back(n);
  long long total = 0;
  for (int c = 0; c < ncomp; ++c) {
    if (comp_xnodes[c].size() > 19) return std::nullopt;
    total += 2LL << comp_xnodes[c].size();
    if (total > kCap) return std::nullopt;
  }

  for (int c = 0; c < ncomp; ++c) {
    const auto& xs = comp_xnodes[c];
    bool ok = false;
    for (int reflect = 0; reflect < 2 && !ok; ++reflect) {
      for (long long mask = 0; mask < (1LL << xs.size()) && !ok; ++mask) {
        auto order = base;
        for (int n = 0; n < sm.node_count(); ++n)
          if (!sm.is_crossing(n) && comp[n] == c && reflect)
            std::reverse(order[n].begin(), order[n].end());
        for (std::size_t i = 0; i < xs.size(); ++i)
          order[xs[i]] = alternating_order(!((mask >> i) & 1));
        auto flags = trace(sm, order).component_euler_ok();
        if (flags[c]) ok = true;
      }
    }
    if (!ok) return false;
  }
  return true;
}

// Gadget graph bookkeeping for the planarity reduction.
struct GadgetGraph {
  using BGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                            boost::property<boost::edge_index_t, int>>;
  struct Meaning {
    enum Kind { stub, spoke, frame } kind = frame;
    int arc = -1, side = -1;  // stub: attachment arcs[arc][side]
    int node = -1, rim = -1;  // spoke: rim index at gadget `node`
  };

  BGraph bg;
  std::vector<Meaning> meanings;
  std::vector<int> hub;                  // per shadow node, -1 when plain
  std::vector<std::vector<int>> rim_point;  // per gadget node, rim index -> point
  std::vector<int> plain;                // per shadow node, -1 when gadget
};

GadgetGraph build_gadget_graph(const ShadowMap& sm, const ShadowCode& code, Rigidity rig) {
  GadgetGraph gg;
  gg.hub.assign(sm.node_count(), -1);
  gg.plain.assign(sm.node_count(), -1);
  gg.rim_point.assign(sm.node_count(), {});

  int nb = 0;
  std::vector<int> rim_base(sm.node_count(), -1);
  for (int n = 0; n < sm.node_count(); ++n) {
    bool gadget = sm.is_crossing(n) || (rig == Rigidity::rigid && sm.points_at(n) >= 3);
    if (!gadget) {
      gg.plain[n] = nb++;
      continue;
    }
    int d = sm.points_at(n);
    gg.hub[n] = nb++;
    rim_base[n] = nb;
    nb += d;
    if (sm.is_crossing(n)) gg.rim_point[n] = alternating_order(true);
    else gg.rim_point[n] = stored_rotation_points(sm, code, n);
  }
  int first_mid = nb;
  nb += static_cast<int>(2 * sm.arcs.size());
  gg.bg = GadgetGraph::BGraph(nb);

  int ei = 0;
  auto add = [&](int u, int v, GadgetGraph::Meaning m) {
    boost::add_edge(u, v, ei++, gg.bg);
    gg.meanings.push_back(m);
  };

  for (int n = 0; n < sm.node_count(); ++n) {
    if (gg.hub[n] < 0) continue;
    int d = sm.points_at(n);
    for (int k = 0; k < d; ++k) {
      add(gg.hub[n], rim_base[n] + k, {GadgetGraph::Meaning::spoke, -1, -1, n, k});
      add(rim_base[n] + k, rim_base[n] + (k + 1) % d, {});
    }
  }
  // Point -> gadget rim vertex or plain vertex.
  auto attach_vertex = [&](const ShadowMap::Att& at) {
    if (gg.plain[at.node] >= 0) return gg.plain[at.node];
    const auto& rp = gg.rim_point[at.node];
    int k = static_cast<int>(std::find(rp.begin(), rp.end(), at.point) - rp.begin());
    return rim_base[at.node] + k;
  };
  for (std::size_t a = 0; a < sm.arcs.size(); ++a) {
    int m1 = first_mid + static_cast<int>(2 * a);
    int m2 = m1 + 1;
    add(attach_vertex(sm.arcs[a][0]), m1, {GadgetGraph::Meaning::stub, static_cast<int>(a), 0});
    add(m1, m2, {});
    add(m2, attach_vertex(sm.arcs[a][1]), {GadgetGraph::Meaning::stub, static_cast<int>(a), 1});
  }
  return gg;
}

}  // namespace

bool verify_certificate(const ShadowCode& code, const RealizationCertificate& cert) {
  ShadowMap sm = build_shadow_map(code);
  std::vector<std::vector<int>> order(sm.node_count());
  for (int n = 0; n < sm.node_count(); ++n) {
    if (sm.is_crossing(n)) {
      auto it = cert.crossing_positive.find(sm.xids[n - static_cast<int>(sm.vnames.size())]);
      if (it == cert.crossing_positive.end()) return false;
      order[n] = alternating_order(it->second);
    } else {
      auto it = cert.vertex_rotation.find(sm.vnames[n]);
      if (it == cert.vertex_rotation.end()) return false;
      const auto& pts = sm.vertex_points[n];
      std::vector<int> o;
      for (auto& end : it->second) {
        auto pit = std::find(pts.begin(), pts.end(), end);
        if (pit == pts.end()) return false;
        o.push_back(static_cast<int>(pit - pts.begin()));
      }
      std::vector<int> sorted = o;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        if (sorted[i] != i) return false;
      order[n] = o;
    }
  }
  return trace(sm, order).genus_zero();
}

RealizabilityResult realizable(const ShadowCode& code, Rigidity rig) {
  require_valid(code, rig);
  RealizabilityResult res;
  ShadowMap sm = build_shadow_map(code);
  if (sm.node_count() == 0) {
    res.realizable = true;
    res.certificate.emplace();
    if (rig == Rigidity::rigid) res.rigid_coherent = true;
    return res;
  }

  GadgetGraph gg = build_gadget_graph(sm, code, rig);
  using BGraph = GadgetGraph::BGraph;
  using EdgeDesc = boost::graph_traits<BGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(boost::num_vertices(gg.bg));
  std::vector<EdgeDesc> kuratowski;
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = gg.bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, gg.bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  if (!planar) {
    std::map<int, int> deg;
    for (auto& e : kuratowski) {
      deg[static_cast<int>(boost::source(e, gg.bg))]++;
      deg[static_cast<int>(boost::target(e, gg.bg))]++;
    }
    bool k5 = false;
    for (auto& [v, d] : deg) {
      (void)v;
      if (d >= 4) k5 = true;
    }
    res.obstruction = std::string("constraint graph contains a subdivided ") +
                      (k5 ? "K5" : "K3,3") + ", so no planar layout exists";
    return res;
  }

  // Rotation per shadow node out of the embedding. Plain nodes read their own
  // cyclic edge order; gadgets read the hub's spoke order, which matches the
  // cyclic order of the external arcs around the wheel.
  auto eidx = boost::get(boost::edge_index, gg.bg);
  std::vector<std::vector<int>> order(sm.node_count());
  for (int n = 0; n < sm.node_count(); ++n) {
    if (gg.plain[n] >= 0) {
      for (auto& e : emb[gg.plain[n]]) {
        const auto& m = gg.meanings[eidx[e]];
        assert(m.kind == GadgetGraph::Meaning::stub);
        order[n].push_back(sm.arcs[m.arc][m.side].point);
      }
    } else {
      std::vector<int> rims;
      for (auto& e : emb[gg.hub[n]]) {
        const auto& m = gg.meanings[eidx[e]];
        assert(m.kind == GadgetGraph::Meaning::spoke && m.node == n);
        rims.push_back(m.rim);
      }
      int d = static_cast<int>(rims.size());
      auto at0 = std::find(rims.begin(), rims.end(), 0) - rims.begin();
      std::rotate(rims.begin(), rims.begin() + at0, rims.end());
      bool forward = d < 2 || rims[1] == 1;
      // A wheel is 3-connected, so its induced rotation is the rim cycle one
      // way or the other.
      for (int k = 0; k < d; ++k)
        assert(rims[k] == (forward ? k : (d - k) % d));
      order[n].resize(d);
      for (int k = 0; k < d; ++k)
        order[n][k] = gg.rim_point[n][forward ? k : (d - k) % d];
    }
  }

  RealizationCertificate cert;
  for (int n = 0; n < sm.node_count(); ++n) {
    if (sm.is_crossing(n)) {
      int cid = sm.xids[n - static_cast<int>(sm.vnames.size())];
      auto o = order[n];
      auto at0 = std::find(o.begin(), o.end(), 0) - o.begin();
      std::rotate(o.begin(), o.begin() + at0, o.end());
      cert.crossing_positive[cid] = o == alternating_order(true);
    } else {
      std::vector<EndRef> rot;
      for (int p : order[n]) rot.push_back(sm.vertex_points[n][p]);
      cert.vertex_rotation[sm.vnames[n]] = rot;
    }
  }
  if (!verify_certificate(code, cert))
    throw std::logic_error("planarity reduction produced a bad certificate");

  res.realizable = true;
  res.certificate = cert;
  if (rig == Rigidity::rigid) res.rigid_coherent = exact_coherent(sm, code);
  return res;
}

RealizabilityResult realizable(const GaussCode& code, Rigidity rig) {
  auto bad = validate(code);
  if (!bad.empty()) throw std::invalid_argument("invalid code: " + bad.front());
  return realizable(shadow(code), rig);
}

bool brute_force_realizable(const ShadowCode& code, Rigidity rig, long long budget) {
  require_valid(code, rig);
  ShadowMap sm = build_shadow_map(code);

  std::vector<std::vector<std::vector<int>>> options(sm.node_count());
  for (int n = 0; n < sm.node_count(); ++n) {
    if (sm.is_crossing(n)) {
      options[n] = {alternating_order(true), alternating_order(false)};
      continue;
    }
    int d = sm.points_at(n);
    if (rig == Rigidity::rigid) {
      auto stored = stored_rotation_points(sm, code, n);
      auto rev = stored;
      std::reverse(rev.begin(), rev.end());
      options[n] = {stored};
      if (d >= 3) options[n].push_back(rev);
      continue;
    }
    // All cyclic orders: fix point 0 first, permute the rest.
    std::vector<int> rest(std::max(d - 1, 0));
    std::iota(rest.begin(), rest.end(), 1);
    do {
      std::vector<int> o(1, 0);
      if (d == 0) o.clear();
      o.insert(o.end(), rest.begin(), rest.end());
      options[n].push_back(o);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  long long total = 1;
  for (auto& opt : options) {
    total *= static_cast<long long>(opt.size());
    if (total > budget)
      throw BudgetError("rotation assignments exceed budget of " + std::to_string(budget));
  }

  std::vector<std::size_t> pick(sm.node_count(), 0);
  std::vector<std::vector<int>> order(sm.node_count());
  for (;;) {
    for (int n = 0; n < sm.node_count(); ++n) order[n] = options[n][pick[n]];
    if (trace(sm, order).genus_zero()) return true;
    int n = 0;
    while (n < sm.node_count() && ++pick[n] == options[n].size()) pick[n++] = 0;
    if (n == sm.node_count()) return false;
  }
}

bool brute_force_realizable(const GaussCode& code, Rigidity rig, long long budget) {
  auto bad = validate(code);
  if (!bad.empty()) throw std::invalid_argument("invalid code: " + bad.front());
  return brute_force_realizable(shadow(code), rig, budget);
}

}  // namespace vsg
