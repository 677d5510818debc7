#pragma once

#include <array>
#include <string>
#include <vector>

#include "vsg/gauss_code.hpp"
#include "vsg/realizability.hpp"

namespace vsg {

// Node of a planar diagram. Port indices list the incident arc slots in cyclic
// (clockwise) order; on 4-valent nodes the two strands occupy opposite ports
// (p and p+2), which makes every such node a transversal crossing. Strand
// slots on 4-valent nodes: 0 = strand-1 in, 1 = strand-1 out, 2 = strand-2 in,
// 3 = strand-2 out, with strand 1 the one scanned first in the code.
struct DiagramNode {
  enum class Kind { vertex, classical, virtual_cross };
  Kind kind = Kind::vertex;
  std::string vertex;                         // Kind::vertex
  int crossing = 0;                           // classical: code id; virtual: serial
  int sign = 0;                               // classical
  bool over_first = false;                    // classical: strand 1 passes over
  std::array<int, 4> slot_of_port{0, 2, 1, 3};  // 4-valent nodes
  std::vector<EndRef> port_label;             // vertex nodes, one label per port

  bool operator==(const DiagramNode&) const = default;
};

// Genus-zero combinatorial map drawing a code in the plane. Classical crossing
// nodes carry the code's decorations; virtual crossing nodes are plain
// transversal intersections added by flattening.
struct PlanarDiagram {
  struct End {
    int node = 0;
    int port = 0;
    bool operator==(const End&) const = default;
  };

  AbstractGraph graph;
  std::vector<DiagramNode> nodes;
  std::vector<std::array<End, 2>> arcs;

  int virtual_count() const;
  int classical_count() const;
  bool operator==(const PlanarDiagram&) const = default;
};

// Empty when well formed: nodes match the graph, ports pair correctly with
// arcs, strand slots pair opposite ports, every component embeds in the
// sphere, and every edge walk runs tail to head through its nodes.
std::vector<std::string> validate_diagram(const PlanarDiagram& d);

// Reads the code back off the diagram by walking each edge from its tail port
// straight through every 4-valent node. Inverse of both drawing routines.
GaussCode extract_gauss(const PlanarDiagram& d);

// Draws the code with no virtual crossings from a realization certificate,
// which must verify. Throws std::invalid_argument otherwise.
PlanarDiagram from_certificate(const GaussCode& code, const RealizationCertificate& cert);

// Draws any valid code in the plane, inserting virtual crossings where the
// strand routing demands them: nodes sit on a rail and every strand segment
// runs through its own overhead lane, so segment intersections are exact
// integer events. Deterministic.
PlanarDiagram realize_virtual(const GaussCode& code);

// Face boundaries as (node, port) sequences, one entry per dart.
std::vector<std::vector<PlanarDiagram::End>> diagram_faces(const PlanarDiagram& d);

}  // namespace vsg
