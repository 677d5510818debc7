#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vsg/graph.hpp"

namespace vsg {

enum class StrandRole { over, under };

inline StrandRole other_role(StrandRole r) {
  return r == StrandRole::over ? StrandRole::under : StrandRole::over;
}

// One pass of an edge through a classical crossing.
struct Passage {
  int crossing = 0;
  StrandRole role = StrandRole::over;
  auto operator<=>(const Passage&) const = default;
};

// Gauss code of a virtual spatial graph diagram: an abstract graph together
// with, per edge, the ordered classical crossings met along it, and a sign per
// crossing. Signs are relative to the stored edge orientations. Virtual
// crossings are not recorded; this is the whole point of the encoding.
struct GaussCode {
  AbstractGraph graph;
  std::map<std::string, std::vector<Passage>> passages;
  std::map<int, int> signs;

  const std::vector<Passage>& passages_on(const std::string& edge) const;
  int sign_of(int crossing) const;
  bool operator==(const GaussCode&) const = default;
};

// Same data with crossing roles and signs forgotten.
struct ShadowCode {
  AbstractGraph graph;
  std::map<std::string, std::vector<int>> passages;

  const std::vector<int>& passages_on(const std::string& edge) const;
  bool operator==(const ShadowCode&) const = default;
};

// Empty when well formed: graph valid, passage keys are edges, every crossing
// id positive and met exactly twice with one over and one under passage, and
// exactly the met crossings carry a sign in {+1, -1}.
std::vector<std::string> validate(const GaussCode& code);
// Shadow version: each crossing met exactly twice, no role or sign checks.
std::vector<std::string> validate(const ShadowCode& code);

ShadowCode shadow(const GaussCode& code);

std::vector<int> crossing_ids(const GaussCode& code);
std::vector<int> crossing_ids(const ShadowCode& code);
int crossing_count(const GaussCode& code);

// Sum of crossing signs.
int writhe(const GaussCode& code);

// Where a crossing's two passages sit, in edge-list scan order.
struct PassageLoc {
  std::string edge;
  int index = 0;
  auto operator<=>(const PassageLoc&) const = default;
};
std::map<int, std::array<PassageLoc, 2>> passage_locations(const GaussCode& code);

// Renames crossings via `f`, which must cover all used ids injectively.
GaussCode relabel_crossings(const GaussCode& code, const std::map<int, int>& f);

// Vertices of the connected component containing v, in stored order.
std::vector<std::string> component_vertices(const AbstractGraph& g, const std::string& v);

// The component of v as a single closed curve: requires every vertex in it to
// have degree 2 and the component to be one cycle.
std::optional<Cycle> component_as_cycle(const AbstractGraph& g, const std::string& v);

// A code whose graph is one closed curve, flattened to a cyclic passage word.
// Signs are re-derived for a coherent traversal: a crossing's stored sign flips
// when exactly one of its two strands is walked against edge orientation.
struct KnotView {
  std::vector<Passage> seq;
  std::map<int, int> sign;
};
std::optional<KnotView> knot_view(const GaussCode& code);

}  // namespace vsg
