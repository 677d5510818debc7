#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vsg/gauss_code.hpp"

namespace vsg {

// Local rewrites on Gauss codes. Purely virtual crossings are not recorded,
// so the purely virtual moves and the detour move are identities here and
// have no MoveKind. The F_* swaps are the forbidden moves: they preserve
// linking data but not the diagram type, and every default set excludes them.
enum class MoveKind {
  R1,              // kink add/remove
  R2,              // poke add/remove
  R3,              // triangle slide
  R4_over,         // strand slides past a vertex, over its ends
  R4_under,        // same, under
  R5_vertex_twist, // two adjacent ends at a vertex twist across each other
  F_over,          // swap adjacent over-passages of two crossings
  F_under,         // swap adjacent under-passages
  F_knot,          // swap an adjacent over/under pair of two crossings
};

const char* move_name(MoveKind k);

struct MoveSet {
  bool allow[9] = {};

  static MoveSet none() { return {}; }
  static MoveSet standard();  // R1..R5_vertex_twist
  static MoveSet all();       // standard plus forbidden
  MoveSet with(MoveKind k) const;
  MoveSet without(MoveKind k) const;
  bool contains(MoveKind k) const { return allow[static_cast<int>(k)]; }
};

struct Neighbor {
  MoveKind kind;
  std::string site;  // deterministic description of where the move acted
  GaussCode code;
};

// Every code reachable by one allowed move, each valid, sorted by
// (kind, site). max_crossings >= 0 drops results with more crossings.
std::vector<Neighbor> neighbors(const GaussCode& code, const MoveSet& allowed = MoveSet::standard(), int max_crossings = -1);

// Serialization equal across crossing relabeling, basepoint rotation of a
// loop edge at a degree-2 vertex (sliding such a vertex along its loop is an
// isotopy), cyclic shifts of stored vertex rotations, and, when
// reorder_components is set, the order components happen to be stored in.
std::string canonical_key(const GaussCode& code, bool reorder_components = true);

uint64_t key_hash(const std::string& key);  // FNV-1a, stable across runs

struct MoveStep {
  MoveKind kind;
  std::string site;
  uint64_t result_hash;  // key_hash(canonical_key(code after this step))
};

// Replayable witness: applying steps[i] at its site from the i-th code must
// reproduce result_hash.
struct MoveTrace {
  GaussCode start;
  std::vector<MoveStep> steps;
};

// Runs the trace and returns the final code; throws std::runtime_error on a
// site that no longer matches or a hash mismatch.
GaussCode replay(const MoveTrace& trace);

// Random walk in the move graph, for invariance harnesses. Stops early if
// some step has no available move.
MoveTrace random_trace(const GaussCode& start, int length, uint64_t seed, const MoveSet& allowed = MoveSet::standard(),
                       int max_crossings = -1);

struct SearchOutcome {
  enum class Verdict { yes, no, unknown };
  Verdict verdict = Verdict::unknown;
  std::optional<MoveTrace> trace;  // set on yes
  std::string witness;             // on no: which invariant separates
  size_t explored = 0;
};

// Bidirectional breadth-first search over canonical keys. Insertions are
// capped at extra_crossings above the larger input so the space stays
// finite; depth bounds the combined trace length and budget the stored
// states. "no" is returned only on an invariant witness (graph betti,
// t_link_profile, yamada up to units), never from search exhaustion.
SearchOutcome equivalent_bounded(const GaussCode& a, const GaussCode& b, int depth = 6, size_t budget = 20000,
                                 const MoveSet& allowed = MoveSet::standard(), int extra_crossings = 2);

// equivalent_bounded against the crossing-free code on the same graph.
// Precondition: the underlying graph is a single loop.
SearchOutcome is_trivial_bounded(const GaussCode& code, int depth = 6, size_t budget = 20000,
                                 const MoveSet& allowed = MoveSet::standard(), int extra_crossings = 2);

}  // namespace vsg
