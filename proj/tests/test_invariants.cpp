#include <algorithm>

#include "doctest.h"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "vsg/invariants.hpp"
#include "vsg/realizability.hpp"

using namespace vsg;

namespace {

GaussCode circle() {
  GaussCode c;
  c.graph.add_vertex("v");
  c.graph.add_edge("a", "v", "v");
  return c;
}

GaussCode kink(int sign) {
  GaussCode c = circle();
  c.passages["a"] = {{1, StrandRole::over}, {1, StrandRole::under}};
  c.signs[1] = sign;
  return c;
}

std::vector<HalfInt> lks(HalfInt v) { return {v}; }

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("linking numbers of the pinned links") {
  CHECK(linking_number(corpus::hopf(), "p", "q") == HalfInt::whole(1));
  CHECK(linking_number(corpus::virtual_hopf(), "p", "q") == HalfInt::from_halves(1));
  CHECK(linking_number(corpus::two_triangles_hopf(), "x1", "y1") == HalfInt::whole(1));
}

TEST_CASE("linking number is symmetric and flips under reversal") {
  auto c = corpus::hopf();
  auto cy1 = *component_as_cycle(c.graph, "p");
  auto cy2 = *component_as_cycle(c.graph, "q");
  CHECK(linking_number(c, cy1, cy2) == linking_number(c, cy2, cy1));
  Cycle rev2;
  for (auto it = cy2.steps.rbegin(); it != cy2.steps.rend(); ++it)
    rev2.steps.push_back({it->edge, !it->forward});
  CHECK(linking_number(c, cy1, rev2) == -linking_number(c, cy1, cy2));
}

TEST_CASE("linking number rejects overlapping input") {
  auto c = corpus::hopf();
  CHECK_THROWS_AS(linking_number(c, "p", "p"), std::invalid_argument);
  auto cy = *component_as_cycle(c.graph, "p");
  CHECK_THROWS_AS(linking_number(c, cy, cy), std::invalid_argument);
  // handcuff components share the bar, so the vertices are connected
  CHECK_THROWS_AS(linking_number(corpus::handcuff_flat(), "u", "w"), std::invalid_argument);
}

TEST_CASE("replacement collection sizes follow the degree law") {
  CHECK(t_collection(corpus::trefoil()).size() == 1);
  CHECK(t_collection(corpus::hopf()).size() == 1);
  CHECK(t_collection(corpus::theta()).size() == 9);
  CHECK(t_collection(corpus::handcuff_flat()).size() == 9);
  CHECK(t_collection(corpus::two_triangles_hopf()).size() == 1);
  CHECK_THROWS_AS(t_collection(corpus::k6_flat(), 1000), BudgetError);
}

TEST_CASE("replacement members are valid link codes") {
  for (auto& base : {corpus::theta_crossed(), corpus::handcuff_crossed(),
                     corpus::two_triangles_hopf(), corpus::virtual_trefoil()}) {
    for (auto& m : t_collection(base)) {
      CHECK(validate(m).empty());
      for (auto& v : m.graph.vertices()) CHECK(m.graph.degree(v) == 2);
    }
  }
}

TEST_CASE("theta replacements split three unknots and six empties") {
  int loops = 0, empties = 0;
  for (auto& m : t_collection(corpus::theta())) {
    if (m.graph.vertex_count() == 0) ++empties;
    if (m.graph.vertex_count() == 1 && crossing_count(m) == 0) ++loops;
  }
  CHECK(loops == 3);
  CHECK(empties == 6);
}

TEST_CASE("knot replacement returns the knot itself") {
  auto col = t_collection(corpus::trefoil());
  REQUIRE(col.size() == 1);
  CHECK(crossing_count(col[0]) == 3);
  CHECK(col[0].passages_on("s0") == corpus::trefoil().passages_on("a"));
  CHECK(col[0].signs == corpus::trefoil().signs);
}

TEST_CASE("link profiles separate the two handcuff diagrams") {
  TLinkProfile crossed_expected;
  crossed_expected.insert(lks(HalfInt::from_halves(1)));
  for (int i = 0; i < 8; ++i) crossed_expected.insert(std::vector<HalfInt>{});
  CHECK(t_link_profile(corpus::handcuff_crossed()) == crossed_expected);

  TLinkProfile flat_expected;
  flat_expected.insert(lks(HalfInt::whole(0)));
  for (int i = 0; i < 8; ++i) flat_expected.insert(std::vector<HalfInt>{});
  CHECK(t_link_profile(corpus::handcuff_flat()) == flat_expected);

  CHECK(t_link_profile(corpus::handcuff_crossed()) != t_link_profile(corpus::handcuff_flat()));
}

TEST_CASE("more pinned profiles") {
  TLinkProfile knot;
  knot.insert(std::vector<HalfInt>{});
  CHECK(t_link_profile(corpus::trefoil()) == knot);
  CHECK(t_link_profile(corpus::virtual_trefoil()) == knot);

  TLinkProfile theta_expected;
  for (int i = 0; i < 9; ++i) theta_expected.insert(std::vector<HalfInt>{});
  CHECK(t_link_profile(corpus::theta()) == theta_expected);

  TLinkProfile hopf_expected;
  hopf_expected.insert(lks(HalfInt::whole(1)));
  CHECK(t_link_profile(corpus::hopf()) == hopf_expected);
  CHECK(t_link_profile(corpus::two_triangles_hopf()) == hopf_expected);

  TLinkProfile vh;
  vh.insert(lks(HalfInt::from_halves(1)));
  CHECK(t_link_profile(corpus::virtual_hopf()) == vh);
}

TEST_CASE("odd writhe distinguishes the virtual trefoil") {
  CHECK(odd_writhe(corpus::virtual_trefoil()) == 2);
  CHECK(odd_writhe(corpus::trefoil()) == 0);
  CHECK(odd_writhe(corpus::figure_eight()) == 0);
  CHECK(odd_writhe(circle()) == 0);
  CHECK(odd_writhe(kink(1)) == 0);
  CHECK_THROWS_AS(odd_writhe(corpus::hopf()), std::invalid_argument);
}

TEST_CASE("odd writhe vanishes on random realizable knots") {
  testing::Rng rng(771);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 40; ++i) {
    auto c = testing::random_knot_code(rng, 1 + static_cast<int>(rng() % 5));
    if (!realizable(c).realizable) continue;
    ++checked;
    CHECK(odd_writhe(c) == 0);
  }
  CHECK(checked >= 20);
}

TEST_CASE("wirtinger shapes on the pinned examples") {
  auto un = wirtinger(circle());
  CHECK(un.generators.size() == 1);
  CHECK(un.relators.empty());

  auto th = wirtinger(corpus::theta());
  CHECK(th.generators.size() == 3);
  CHECK(th.relators.size() == 2);

  auto tr = wirtinger(corpus::trefoil());
  CHECK(tr.generators.size() == 4);
  CHECK(tr.relators.size() == 4);  // three crossings plus the basepoint vertex
}

TEST_CASE("abelianization rank equals the graph's betti number") {
  for (auto& c : {corpus::trefoil(), corpus::figure_eight(), corpus::virtual_trefoil(),
                  corpus::hopf(), corpus::virtual_hopf(), corpus::theta(),
                  corpus::theta_crossed(), corpus::handcuff_flat(),
                  corpus::handcuff_crossed(), corpus::k6_flat(),
                  corpus::two_triangles_hopf(), corpus::unrealizable_loop()}) {
    CHECK(abelianization_rank(wirtinger(c)) == c.graph.betti());
  }
  CHECK(corpus::theta().graph.betti() == 2);
  CHECK(corpus::k6_flat().graph.betti() == 10);
}

TEST_CASE("abelianization rank matches betti on random codes") {
  testing::Rng rng(772);
  for (int i = 0; i < 60; ++i) {
    auto c = i % 2 ? testing::random_knot_code(rng, 1 + static_cast<int>(rng() % 6))
                   : testing::random_graph_code(rng, 5);
    CHECK(abelianization_rank(wirtinger(c)) == c.graph.betti());
  }
}

TEST_CASE("group tables are groups") {
  for (auto& g : {cyclic_group(2), cyclic_group(3), cyclic_group(5), symmetric_group_3()}) {
    for (int a = 0; a < g.order; ++a) {
      CHECK(g.mult[0][a] == a);
      CHECK(g.mult[a][0] == a);
      CHECK(g.mult[a][g.inverse[a]] == 0);
      for (int b = 0; b < g.order; ++b)
        for (int c = 0; c < g.order; ++c)
          CHECK(g.mult[g.mult[a][b]][c] == g.mult[a][g.mult[b][c]]);
    }
  }
  // S3 is nonabelian
  auto s3 = symmetric_group_3();
  bool commutes = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (s3.mult[a][b] != s3.mult[b][a]) commutes = false;
  CHECK(!commutes);
}

TEST_CASE("hom counts certify the trefoil nontrivial") {
  auto s3 = symmetric_group_3();
  auto z3 = cyclic_group(3);
  CHECK(hom_count(wirtinger(circle()), s3) == 6);
  CHECK(hom_count(wirtinger(circle()), z3) == 3);
  CHECK(hom_count(wirtinger(corpus::trefoil()), s3) == 12);
  CHECK(hom_count(wirtinger(corpus::trefoil()), z3) == 3);
  CHECK(hom_count(wirtinger(corpus::figure_eight()), s3) == 6);
  CHECK(hom_count(wirtinger(corpus::theta()), s3) == 18);
}

TEST_CASE("hom count against brute force on small presentations") {
  // brute force without propagation, small generator counts only
  auto brute = [](const GroupPresentation& p, const FiniteGroup& G) {
    long long n = 1;
    for (std::size_t i = 0; i < p.generators.size(); ++i) n *= G.order;
    long long count = 0;
    for (long long mask = 0; mask < n; ++mask) {
      std::vector<int> val;
      long long m = mask;
      for (std::size_t i = 0; i < p.generators.size(); ++i) {
        val.push_back(static_cast<int>(m % G.order));
        m /= G.order;
      }
      bool ok = true;
      for (auto& r : p.relators) {
        int prod = 0;
        for (auto& [g, e] : r) prod = G.mult[prod][e > 0 ? val[g] : G.inverse[val[g]]];
        if (prod != 0) ok = false;
      }
      if (ok) ++count;
    }
    return count;
  };
  auto s3 = symmetric_group_3();
  auto z3 = cyclic_group(3);
  for (auto& c : {corpus::virtual_trefoil(), corpus::hopf(), corpus::virtual_hopf(), kink(-1)}) {
    auto p = wirtinger(c);
    CHECK(hom_count(p, s3) == brute(p, s3));
    CHECK(hom_count(p, z3) == brute(p, z3));
  }
}

TEST_CASE("hom count budget") {
  CHECK_THROWS_AS(hom_count(wirtinger(corpus::trefoil()), symmetric_group_3(), 10), BudgetError);
}

}  // TEST_SUITE
