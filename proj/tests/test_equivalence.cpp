#include <algorithm>

#include "doctest.h"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "vsg/invariants.hpp"
#include "vsg/moves.hpp"

using namespace vsg;

namespace {

GaussCode circle() {
  GaussCode c;
  c.graph.add_vertex("v");
  c.graph.add_edge("a", "v", "v");
  return c;
}

GaussCode with_kink(GaussCode c, int sign) {
  int id = 1;
  for (int used : crossing_ids(c)) id = std::max(id, used + 1);
  c.passages["a"].push_back({id, StrandRole::over});
  c.passages["a"].push_back({id, StrandRole::under});
  c.signs[id] = sign;
  return c;
}

using Verdict = SearchOutcome::Verdict;

}  // namespace

TEST_SUITE("equivalence") {

TEST_CASE("a code equals itself with an empty trace") {
  GaussCode t = corpus::trefoil();
  auto out = equivalent_bounded(t, t);
  CHECK(out.verdict == Verdict::yes);
  REQUIRE(out.trace.has_value());
  CHECK(out.trace->steps.empty());
  CHECK(replay(*out.trace) == t);
}

TEST_CASE("relabeled crossings are already equal") {
  GaussCode t = corpus::trefoil();
  GaussCode r = relabel_crossings(t, {{1, 3}, {2, 2}, {3, 1}});
  auto out = equivalent_bounded(t, r, 2, 100);
  CHECK(out.verdict == Verdict::yes);
  CHECK(out.trace->steps.empty());
}

TEST_CASE("one kink undoes at depth one") {
  auto out = is_trivial_bounded(with_kink(circle(), -1), 1, 1000);
  CHECK(out.verdict == Verdict::yes);
  REQUIRE(out.trace.has_value());
  CHECK(out.trace->steps.size() == 1);
  CHECK(out.trace->steps[0].kind == MoveKind::R1);
  CHECK(canonical_key(replay(*out.trace)) == canonical_key(circle()));
}

TEST_CASE("the empty loop is trivially trivial") {
  auto out = is_trivial_bounded(circle());
  CHECK(out.verdict == Verdict::yes);
  CHECK(out.trace->steps.empty());
}

TEST_CASE("triviality check rejects non-loop graphs") {
  CHECK_THROWS_AS(is_trivial_bounded(corpus::theta()), std::invalid_argument);
}

TEST_CASE("trefoil vs unknot is refuted, not exhausted") {
  auto out = equivalent_bounded(corpus::trefoil(), circle(), 3, 500);
  CHECK(out.verdict == Verdict::no);
  CHECK(out.witness == "yamada");
}

TEST_CASE("figure eight vs unknot is refuted") {
  auto out = equivalent_bounded(corpus::figure_eight(), circle(), 2, 200);
  CHECK(out.verdict == Verdict::no);
  CHECK(out.witness == "yamada");
}

TEST_CASE("different cycle structure is refuted by betti") {
  GaussCode two;
  two.graph.add_vertex("p");
  two.graph.add_vertex("q");
  two.graph.add_edge("a", "p", "p");
  two.graph.add_edge("b", "q", "q");
  auto out = equivalent_bounded(circle(), two);
  CHECK(out.verdict == Verdict::no);
  CHECK(out.witness == "betti");
}

TEST_CASE("linked vs unlinked loops differ in the sublink profile") {
  GaussCode two;
  two.graph.add_vertex("p");
  two.graph.add_vertex("q");
  two.graph.add_edge("a", "p", "p");
  two.graph.add_edge("b", "q", "q");
  auto out = equivalent_bounded(corpus::hopf(), two, 2, 200);
  CHECK(out.verdict == Verdict::no);
  CHECK(out.witness == "t_link_profile");
}

TEST_CASE("theta vs handcuff is refuted without searching") {
  auto out = equivalent_bounded(corpus::theta(), corpus::handcuff_flat());
  CHECK(out.verdict == Verdict::no);
  CHECK(out.explored == 0);
}

TEST_CASE("renamed graphs come back unknown, not yes") {
  GaussCode renamed;
  renamed.graph.add_vertex("w");
  renamed.graph.add_edge("z", "w", "w");
  auto out = equivalent_bounded(circle(), renamed, 2, 100);
  CHECK(out.verdict == Verdict::unknown);
}

TEST_CASE("inflated unknot resolves within depth six") {
  // two pokes and two kinks on the empty loop: six crossings to unwind
  GaussCode c = circle();
  auto pokes = neighbors(c, MoveSet::none().with(MoveKind::R2));
  REQUIRE(!pokes.empty());
  c = pokes.front().code;
  auto again = neighbors(c, MoveSet::none().with(MoveKind::R2), 4);
  REQUIRE(!again.empty());
  c = again[again.size() / 2].code;
  c = with_kink(std::move(c), +1);
  c = with_kink(std::move(c), -1);
  REQUIRE(crossing_count(c) == 6);
  auto out = is_trivial_bounded(c, 6, 20000, MoveSet::standard(), 0);
  CHECK(out.verdict == Verdict::yes);
  REQUIRE(out.trace.has_value());
  CHECK(out.trace->steps.size() <= 6);
  CHECK(canonical_key(replay(*out.trace)) == canonical_key(circle()));
}

TEST_CASE("search meets in the middle on a poked pair") {
  // same diagram reached by two different poke insertions
  GaussCode base = corpus::theta();
  auto ns = neighbors(base, MoveSet::none().with(MoveKind::R2), 2);
  REQUIRE(ns.size() >= 2);
  const GaussCode& a = ns.front().code;
  const GaussCode& b = ns.back().code;
  auto out = equivalent_bounded(a, b, 4, 20000, MoveSet::standard(), 2);
  CHECK(out.verdict == Verdict::yes);
  REQUIRE(out.trace.has_value());
  CHECK(canonical_key(replay(*out.trace)) == canonical_key(b));
}

TEST_CASE("virtual trefoil stays unresolved at small depth") {
  auto out = equivalent_bounded(corpus::virtual_trefoil(), circle(), 2, 300);
  CHECK(out.verdict != Verdict::yes);
}

TEST_CASE("exhaustion reports unknown with the states it saw") {
  GaussCode t = corpus::trefoil();
  GaussCode m = replay(random_trace(t, 4, 5, MoveSet::standard(), 6));
  auto out = equivalent_bounded(t, m, 1, 10);
  if (out.verdict == Verdict::unknown) CHECK(out.explored > 0);
  // with a real budget the same pair resolves
  auto full = equivalent_bounded(t, m, 5, 20000, MoveSet::standard(), 3);
  CHECK(full.verdict == Verdict::yes);
  CHECK(canonical_key(replay(*full.trace)) == canonical_key(m));
}

}  // TEST_SUITE
