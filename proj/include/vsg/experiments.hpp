#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vsg/gauss_code.hpp"
#include "vsg/graph.hpp"
#include "vsg/half_integer.hpp"
#include "vsg/invariants.hpp"
#include "vsg/moves.hpp"

namespace vsg {

// One vertex-disjoint cycle pair with its linking number. `certified` means
// provably nonsplit (lk != 0); lk == 0 carries no verdict either way.
struct LinkEntry {
  CyclePair pair;
  HalfInt lk;
  bool certified = false;
};

struct LinkReport {
  std::vector<LinkEntry> entries;
  bool any_certified() const;
};

// Linking number of every disjoint cycle pair of the underlying graph,
// ordered as disjoint_cycle_pairs orders them.
LinkReport detect_links(const GaussCode& code);

// Sum of the linking numbers over the ten disjoint-triangle pairs of a K6
// diagram, reduced mod 2. Requires the underlying graph to be complete on six
// vertices and the code realizable; every pairwise lk is then an integer.
int conway_gordon_parity(const GaussCode& code);

// Deletes the listed classical crossings (passages and signs); the graph is
// untouched. Unknown ids are an error. virtualize(c, {}) == c.
GaussCode virtualize(const GaussCode& code, const std::set<int>& crossings);

// Per-crossing outcome of making that one crossing virtual.
struct Ivl1Singleton {
  int crossing = 0;
  bool retains_link = false;   // some cycle pair keeps odd or non-integral lk
  CyclePair witness_pair;      // meaningful when retains_link
  HalfInt witness_lk;
};

struct Ivl1Report {
  bool graph_planar = false;       // informational: planar graphs cannot be
                                   // intrinsically linked, so (a) will fail
  bool odd_pair = false;           // (a) some cycle pair has odd integer lk
  CyclePair odd_pair_cycles;       // witness when odd_pair
  HalfInt odd_pair_lk;
  std::vector<Ivl1Singleton> singletons;  // (b) one entry per crossing

  // (a) holds and every single virtualization retains a linked pair.
  bool holds() const;
};

// Evidence that the diagram stays linked after any one crossing is made
// virtual. Requires a realizable code.
Ivl1Report ivl1_witness(const GaussCode& code);

struct VuUpper {
  std::optional<std::set<int>> crossings;  // smallest certified set found
  std::optional<MoveTrace> trace;          // unknotting trace for the
                                           // virtualized code, when found
  // Some candidate subset came back unresolved from the bounded search. When
  // set alongside a found set, a smaller set may exist but was not certified;
  // when set with no set found, "none found" is inconclusive.
  bool budget_exceeded = false;
};

// Scans subsets of classical crossings by ascending size (0..max_size,
// lexicographic within a size) and returns the first whose virtualization is
// certified trivial by the bounded move search. Knot codes only.
VuUpper vu_upper(const GaussCode& code, int max_size, int depth = 6,
                 std::size_t search_budget = 20000, int extra_crossings = 2);

struct VuEvidence {
  int crossing = 0;
  // "odd_writhe", "hom_count", "yamada", or "" when inconclusive.
  std::string certificate;
};

// For each single-crossing virtualization, a nontriviality certificate when
// one of the three invariants distinguishes it from the crossing-free circle.
// All singletons certified establishes vu >= 2 for this diagram.
std::vector<VuEvidence> vu_lower_singletons(const GaussCode& code);

struct VuReport {
  VuUpper upper;
  std::vector<VuEvidence> lower;
};

VuReport vu_report(const GaussCode& code, int max_size, int depth = 6,
                   std::size_t search_budget = 20000, int extra_crossings = 2);

struct ForbiddenSeparation {
  GaussCode first, second;         // same connected graph, both in the corpus
  TLinkProfile first_profile, second_profile;
  bool profiles_differ = false;
  int sequences_checked = 0;
  bool profiles_stable = false;    // every random full-move-set sequence kept
                                   // its start profile
};

// Two handcuff-graph diagrams whose closed-component linking profiles differ,
// plus a randomized check that the profile survives sequences drawn from the
// full move set, forbidden moves included. The profile therefore separates
// diagrams that no move sequence connects.
ForbiddenSeparation forbidden_separation_demo(std::uint64_t seed = 0,
                                              int sequences = 500);

// Random classical K6 diagram: six seeded points in general position,
// straight-line edges, crossings read off the drawing in parameter order,
// over/under and thus signs chosen by coin flips. Realizable by construction
// (the construction is a drawing); vertices v1..v6, edges eIJ: vI -> vJ.
GaussCode random_k6_code(std::uint64_t seed);

}  // namespace vsg
