#include "vsg/planar_diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "vsg/planar_map.hpp"

namespace vsg {

namespace {

using End = PlanarDiagram::End;

int ports_at(const DiagramNode& n) {
  return n.kind == DiagramNode::Kind::vertex ? static_cast<int>(n.port_label.size()) : 4;
}

int port_of_slot(const DiagramNode& n, int slot) {
  const auto& sp = n.slot_of_port;
  return static_cast<int>(std::find(sp.begin(), sp.end(), slot) - sp.begin());
}

// Station nodes shared by both drawing routines: one vertex node per graph
// vertex first, then one classical node per crossing in ascending id order.
// Routes are the strand segments between consecutive attachments.
struct Stations {
  std::map<std::string, int> vnode;
  std::map<int, int> xnode;
  std::vector<std::array<End, 2>> routes;
};

Stations build_stations(const GaussCode& code, PlanarDiagram& d,
                        const RealizationCertificate* cert) {
  Stations st;
  for (auto& v : code.graph.vertices()) {
    st.vnode[v] = static_cast<int>(d.nodes.size());
    DiagramNode n;
    n.kind = DiagramNode::Kind::vertex;
    n.vertex = v;
    if (cert) n.port_label = cert->vertex_rotation.at(v);
    else if (code.graph.has_rotations()) n.port_label = code.graph.rotation(v);
    else n.port_label = code.graph.incident_ends(v);
    d.nodes.push_back(std::move(n));
  }
  for (int c : crossing_ids(code)) {
    st.xnode[c] = static_cast<int>(d.nodes.size());
    DiagramNode n;
    n.kind = DiagramNode::Kind::classical;
    n.crossing = c;
    n.sign = code.sign_of(c);
    if (cert && !cert->crossing_positive.at(c)) n.slot_of_port = {0, 3, 1, 2};
    d.nodes.push_back(std::move(n));
  }

  auto vertex_att = [&](const EndRef& end) {
    int n = st.vnode.at(code.graph.end_vertex(end));
    const auto& pl = d.nodes[n].port_label;
    int p = static_cast<int>(std::find(pl.begin(), pl.end(), end) - pl.begin());
    return End{n, p};
  };

  std::map<int, int> visits;
  for (auto& e : code.graph.edges()) {
    End prev = vertex_att({e.id, false});
    for (auto& pass : code.passages_on(e.id)) {
      int s = visits[pass.crossing]++;
      int n = st.xnode.at(pass.crossing);
      if (s == 0) d.nodes[n].over_first = pass.role == StrandRole::over;
      st.routes.push_back({prev, End{n, port_of_slot(d.nodes[n], 2 * s)}});
      prev = {n, port_of_slot(d.nodes[n], 2 * s + 1)};
    }
    st.routes.push_back({prev, vertex_att({e.id, true})});
  }
  return st;
}

void require_valid_code(const GaussCode& code) {
  auto bad = validate(code);
  if (!bad.empty()) throw std::invalid_argument("invalid code: " + bad.front());
}

}  // namespace

int PlanarDiagram::virtual_count() const {
  int n = 0;
  for (auto& node : nodes)
    if (node.kind == DiagramNode::Kind::virtual_cross) ++n;
  return n;
}

int PlanarDiagram::classical_count() const {
  int n = 0;
  for (auto& node : nodes)
    if (node.kind == DiagramNode::Kind::classical) ++n;
  return n;
}

PlanarDiagram from_certificate(const GaussCode& code, const RealizationCertificate& cert) {
  require_valid_code(code);
  for (auto& v : code.graph.vertices())
    if (!cert.vertex_rotation.count(v))
      throw std::invalid_argument("certificate misses vertex " + v);
  for (int c : crossing_ids(code))
    if (!cert.crossing_positive.count(c))
      throw std::invalid_argument("certificate misses a crossing");
  if (!verify_certificate(shadow(code), cert))
    throw std::invalid_argument("certificate does not verify");

  PlanarDiagram d;
  d.graph = code.graph;
  auto st = build_stations(code, d, &cert);
  d.arcs = std::move(st.routes);
  return d;
}

PlanarDiagram realize_virtual(const GaussCode& code) {
  require_valid_code(code);
  PlanarDiagram d;
  d.graph = code.graph;
  auto st = build_stations(code, d, nullptr);
  const auto& routes = st.routes;

  // Rail layout: every port gets its own x slot, ports of a node adjacent in
  // rotation order; route i runs up from its first port, across lane i, and
  // down to its second port. Strictly ordered integer slots make every
  // intersection an exact comparison.
  std::vector<int> xbase(d.nodes.size() + 1, 0);
  for (std::size_t n = 0; n < d.nodes.size(); ++n)
    xbase[n + 1] = xbase[n] + ports_at(d.nodes[n]);
  auto x_of = [&](const End& a) { return xbase[a.node] + a.port; };

  // A lower lane's horizontal run is crossed by the vertical legs of higher
  // lanes that land strictly inside it. Each such event becomes one virtual
  // node; keyed by (higher route, leg, lower route).
  std::map<std::tuple<int, int, int>, int> event_node;
  int serial = 0;
  for (std::size_t lo = 0; lo < routes.size(); ++lo) {
    int xa = x_of(routes[lo][0]), xb = x_of(routes[lo][1]);
    int a = std::min(xa, xb), b = std::max(xa, xb);
    for (std::size_t hi = lo + 1; hi < routes.size(); ++hi)
      for (int leg = 0; leg < 2; ++leg) {
        int x = x_of(routes[hi][leg]);
        if (a < x && x < b) {
          DiagramNode n;
          n.kind = DiagramNode::Kind::virtual_cross;
          n.crossing = ++serial;
          event_node[{static_cast<int>(hi), leg, static_cast<int>(lo)}] =
              static_cast<int>(d.nodes.size());
          d.nodes.push_back(std::move(n));
        }
      }
  }

  // Virtual node ports in clockwise order: 0 below, 1 left, 2 above, 3 right.
  // The vertical strand holds ports 0 and 2, the horizontal 1 and 3.
  for (std::size_t r = 0; r < routes.size(); ++r) {
    int x0 = x_of(routes[r][0]), x1 = x_of(routes[r][1]);
    struct Stop {
      int node, in_port, out_port;
    };
    std::vector<Stop> stops;

    std::vector<std::pair<int, int>> below;  // (lower route, event node), up leg
    for (auto& [key, node] : event_node)
      if (std::get<0>(key) == static_cast<int>(r) && std::get<1>(key) == 0)
        below.push_back({std::get<2>(key), node});
    std::sort(below.begin(), below.end());
    for (auto& [lo, node] : below) stops.push_back({node, 0, 2});

    std::vector<std::pair<int, int>> across;  // (x, event node), horizontal run
    for (auto& [key, node] : event_node)
      if (std::get<2>(key) == static_cast<int>(r))
        across.push_back({x_of(routes[std::get<0>(key)][std::get<1>(key)]), node});
    std::sort(across.begin(), across.end());
    if (x0 > x1) std::reverse(across.begin(), across.end());
    for (auto& [x, node] : across)
      stops.push_back(x0 < x1 ? Stop{node, 1, 3} : Stop{node, 3, 1});

    std::vector<std::pair<int, int>> down;  // (lower route, event node), down leg
    for (auto& [key, node] : event_node)
      if (std::get<0>(key) == static_cast<int>(r) && std::get<1>(key) == 1)
        down.push_back({std::get<2>(key), node});
    std::sort(down.begin(), down.end(), std::greater<>());
    for (auto& [lo, node] : down) stops.push_back({node, 2, 0});

    End prev = routes[r][0];
    for (auto& s : stops) {
      d.arcs.push_back({prev, End{s.node, s.in_port}});
      prev = {s.node, s.out_port};
    }
    d.arcs.push_back({prev, routes[r][1]});
  }
  return d;
}

GaussCode extract_gauss(const PlanarDiagram& d) {
  std::map<std::string, int> vnode;
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (d.nodes[i].kind == DiagramNode::Kind::vertex) vnode[d.nodes[i].vertex] = static_cast<int>(i);

  std::map<std::pair<int, int>, std::pair<int, int>> at;  // (node, port) -> (arc, side)
  for (std::size_t a = 0; a < d.arcs.size(); ++a)
    for (int s = 0; s < 2; ++s) at[{d.arcs[a][s].node, d.arcs[a][s].port}] = {static_cast<int>(a), s};

  auto vertex_port = [&](const EndRef& end) {
    int n = vnode.at(d.graph.end_vertex(end));
    const auto& pl = d.nodes[n].port_label;
    auto it = std::find(pl.begin(), pl.end(), end);
    if (it == pl.end()) throw std::logic_error("diagram misses an edge end port");
    return End{n, static_cast<int>(it - pl.begin())};
  };

  GaussCode out;
  out.graph = d.graph;
  const std::size_t cap = 2 * d.arcs.size() + 2;
  for (auto& e : d.graph.edges()) {
    End cur = vertex_port({e.id, false});
    for (std::size_t step = 0;; ++step) {
      if (step > cap) throw std::logic_error("edge walk does not terminate");
      auto [a, s] = at.at({cur.node, cur.port});
      End far = d.arcs[a][1 - s];
      const auto& node = d.nodes[far.node];
      if (node.kind == DiagramNode::Kind::vertex) {
        if (!(far == vertex_port({e.id, true})))
          throw std::logic_error("edge walk ends at the wrong port");
        break;
      }
      if (node.kind == DiagramNode::Kind::classical) {
        bool first_strand = node.slot_of_port[far.port] < 2;
        out.passages[e.id].push_back(
            {node.crossing,
             first_strand == node.over_first ? StrandRole::over : StrandRole::under});
        out.signs[node.crossing] = node.sign;
      }
      cur = {far.node, (far.port + 2) % 4};
    }
  }
  return out;
}

std::vector<std::string> validate_diagram(const PlanarDiagram& d) {
  std::vector<std::string> out;
  for (auto& m : d.graph.validate()) out.push_back("graph: " + m);
  if (!out.empty()) return out;

  std::map<std::string, int> vcount;
  std::set<int> xids;
  for (auto& n : d.nodes) {
    switch (n.kind) {
      case DiagramNode::Kind::vertex:
        if (!d.graph.has_vertex(n.vertex)) {
          out.push_back("node for unknown vertex " + n.vertex);
          break;
        }
        ++vcount[n.vertex];
        {
          auto want = d.graph.incident_ends(n.vertex);
          auto got = n.port_label;
          std::sort(want.begin(), want.end());
          std::sort(got.begin(), got.end());
          if (want != got) out.push_back("port labels at " + n.vertex + " are not its ends");
        }
        break;
      case DiagramNode::Kind::classical:
        if (n.crossing <= 0) out.push_back("classical node with nonpositive id");
        else if (!xids.insert(n.crossing).second) out.push_back("repeated crossing id");
        if (n.sign != 1 && n.sign != -1) out.push_back("classical node with sign not in {+1,-1}");
        [[fallthrough]];
      case DiagramNode::Kind::virtual_cross: {
        auto sp = n.slot_of_port;
        std::sort(sp.begin(), sp.end());
        if (sp != std::array<int, 4>{0, 1, 2, 3})
          out.push_back("slot assignment is not a permutation");
        else
          for (int p = 0; p < 2; ++p) {
            int lo = std::min(n.slot_of_port[p], n.slot_of_port[p + 2]);
            int hi = std::max(n.slot_of_port[p], n.slot_of_port[p + 2]);
            if (!(lo + 1 == hi && lo % 2 == 0))
              out.push_back("strand slots do not sit on opposite ports");
          }
        break;
      }
    }
  }
  for (auto& v : d.graph.vertices())
    if (vcount[v] != 1) out.push_back("vertex " + v + " has " + std::to_string(vcount[v]) + " nodes");
  if (!out.empty()) return out;

  std::map<std::pair<int, int>, int> port_uses;
  for (auto& arc : d.arcs)
    for (auto& end : arc) {
      if (end.node < 0 || end.node >= static_cast<int>(d.nodes.size())) {
        out.push_back("arc end at unknown node");
        continue;
      }
      if (end.port < 0 || end.port >= ports_at(d.nodes[end.node])) {
        out.push_back("arc end at unknown port");
        continue;
      }
      ++port_uses[{end.node, end.port}];
    }
  for (std::size_t n = 0; n < d.nodes.size(); ++n)
    for (int p = 0; p < ports_at(d.nodes[n]); ++p)
      if (port_uses[{static_cast<int>(n), p}] != 1) {
        out.push_back("port " + std::to_string(p) + " of node " + std::to_string(n) + " used " +
                      std::to_string(port_uses[{static_cast<int>(n), p}]) + " times");
      }
  if (!out.empty()) return out;

  RotationMap rm;
  for (std::size_t n = 0; n < d.nodes.size(); ++n) rm.add_node();
  std::vector<std::vector<int>> port_dart(d.nodes.size());
  for (std::size_t n = 0; n < d.nodes.size(); ++n) port_dart[n].assign(ports_at(d.nodes[n]), -1);
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    rm.add_arc(d.arcs[a][0].node, d.arcs[a][1].node);
    port_dart[d.arcs[a][0].node][d.arcs[a][0].port] = static_cast<int>(2 * a);
    port_dart[d.arcs[a][1].node][d.arcs[a][1].port] = static_cast<int>(2 * a + 1);
  }
  for (std::size_t n = 0; n < d.nodes.size(); ++n) rm.set_rotation(static_cast<int>(n), port_dart[n]);
  if (!rm.genus_zero()) out.push_back("a component does not embed in the sphere");

  // Edge walks must cover every arc exactly once and end at the head port.
  std::map<std::pair<int, int>, std::pair<int, int>> at;
  for (std::size_t a = 0; a < d.arcs.size(); ++a)
    for (int s = 0; s < 2; ++s) at[{d.arcs[a][s].node, d.arcs[a][s].port}] = {static_cast<int>(a), s};
  std::map<std::string, int> vnode;
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (d.nodes[i].kind == DiagramNode::Kind::vertex) vnode[d.nodes[i].vertex] = static_cast<int>(i);
  auto vertex_port = [&](const EndRef& end) {
    int n = vnode.at(d.graph.end_vertex(end));
    const auto& pl = d.nodes[n].port_label;
    return End{n, static_cast<int>(std::find(pl.begin(), pl.end(), end) - pl.begin())};
  };
  std::vector<int> arc_uses(d.arcs.size(), 0);
  const std::size_t cap = 2 * d.arcs.size() + 2;
  for (auto& e : d.graph.edges()) {
    End cur = vertex_port({e.id, false});
    for (std::size_t step = 0;; ++step) {
      if (step > cap) {
        out.push_back("walk of edge " + e.id + " does not terminate");
        break;
      }
      auto [a, s] = at.at({cur.node, cur.port});
      ++arc_uses[a];
      End far = d.arcs[a][1 - s];
      if (d.nodes[far.node].kind == DiagramNode::Kind::vertex) {
        if (!(far == vertex_port({e.id, true})))
          out.push_back("walk of edge " + e.id + " ends at the wrong port");
        break;
      }
      cur = {far.node, (far.port + 2) % 4};
    }
  }
  for (std::size_t a = 0; a < d.arcs.size(); ++a)
    if (arc_uses[a] != 1) {
      out.push_back("arc " + std::to_string(a) + " walked " + std::to_string(arc_uses[a]) +
                    " times");
      break;
    }
  return out;
}

std::vector<std::vector<PlanarDiagram::End>> diagram_faces(const PlanarDiagram& d) {
  RotationMap rm;
  for (std::size_t n = 0; n < d.nodes.size(); ++n) rm.add_node();
  std::vector<std::vector<int>> port_dart(d.nodes.size());
  std::vector<End> dart_end(2 * d.arcs.size());
  for (std::size_t n = 0; n < d.nodes.size(); ++n) port_dart[n].assign(ports_at(d.nodes[n]), -1);
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    rm.add_arc(d.arcs[a][0].node, d.arcs[a][1].node);
    for (int s = 0; s < 2; ++s) {
      port_dart[d.arcs[a][s].node][d.arcs[a][s].port] = static_cast<int>(2 * a + s);
      dart_end[2 * a + s] = d.arcs[a][s];
    }
  }
  for (std::size_t n = 0; n < d.nodes.size(); ++n) rm.set_rotation(static_cast<int>(n), port_dart[n]);
  std::vector<std::vector<End>> out;
  for (auto& orbit : rm.face_orbits()) {
    std::vector<End> face;
    for (int dart : orbit) face.push_back(dart_end[dart]);
    out.push_back(std::move(face));
  }
  return out;
}

}  // namespace vsg
