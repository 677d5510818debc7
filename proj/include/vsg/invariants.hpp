#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vsg/gauss_code.hpp"
#include "vsg/half_integer.hpp"

namespace vsg {

// Half the signed count of classical crossings with one passage on each cycle.
// Signs are adjusted for traversal direction, so the result is independent of
// stored edge orientations. Throws if the cycles share an edge.
HalfInt linking_number(const GaussCode& code, const Cycle& c1, const Cycle& c2);

// Same, for whole components named by a vertex each: the component of v1
// against the component of v2. Each component must be a single closed curve.
HalfInt linking_number(const GaussCode& code, const std::string& v1, const std::string& v2);

// Every way of replacing each graph vertex by a join of two of its incident
// ends (the other ends become free). Closed strands survive as the components
// of a link; open strands are erased, taking their crossings with them. Each
// result is a link code: one vertex cI and loop edge sI per closed strand,
// signs adjusted for traversal direction. Exactly prod_v C(deg v, 2) members,
// in odometer order over the per-vertex end pairs; empty when some vertex has
// degree < 2. Throws BudgetError when the member count exceeds the budget.
std::vector<GaussCode> t_collection(const GaussCode& code, long long budget = 1'000'000);

// For each member of t_collection, the sorted list of absolute pairwise
// linking numbers of its components (empty list when under 2 components),
// aggregated as a multiset. Absolute values because a strand has no preferred
// direction and reversing one flips the sign.
using TLinkProfile = std::multiset<std::vector<HalfInt>>;
TLinkProfile t_link_profile(const GaussCode& code, long long budget = 1'000'000);

// Sum of signs of the odd crossings of a one-curve code: those whose chord an
// odd number of other chords interleave. Classical realizable knots score 0.
// Signs are the traversal-adjusted ones. Throws on codes that are not a
// single closed curve.
int odd_writhe(const GaussCode& code);

// Finitely presented group. Letters are (generator index, +1 or -1).
struct GroupPresentation {
  using Word = std::vector<std::pair<int, int>>;
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// Wirtinger presentation of the diagram's group. One generator per over-arc:
// passage sequences split at under-passages and at graph vertices. One
// conjugation relator per classical crossing and one relator per graph
// vertex: the product of end generators in rotation order (stored rotations
// when present, the canonical incident-end order otherwise), outgoing ends
// with exponent +1 and incoming with -1. Vertex relators that freely reduce
// to nothing are dropped.
GroupPresentation wirtinger(const GaussCode& code);

// Rank of the free part of the abelianization: generators minus the rational
// rank of the relator exponent matrix.
int abelianization_rank(const GroupPresentation& p);

// Multiplication table of a small group. Element 0 is the identity.
struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> mult;
  std::vector<int> inverse;
};

FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group_3();

// Number of assignments of generators to group elements satisfying every
// relator. Throws BudgetError when order^generators exceeds the budget.
long long hom_count(const GroupPresentation& p, const FiniteGroup& target,
                    long long budget = 10'000'000);

}  // namespace vsg
