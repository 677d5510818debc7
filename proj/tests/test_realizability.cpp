#include <algorithm>
#include <functional>

#include "doctest.h"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "vsg/realizability.hpp"
#include "vsg/vsg_format.hpp"

using namespace vsg;

namespace {

// All one-loop shadow words with n crossings, one representative per word.
std::vector<ShadowCode> one_loop_shadows(int n) {
  std::vector<ShadowCode> out;
  // Position of first occurrence fixes ids by scan order, so enumerate
  // pairings of 2n slots and label pairs 1..n in order of first slot.
  std::vector<int> pair_of(2 * n, -1);
  std::function<void(int)> rec = [&](int next_id) {
    int slot = -1;
    for (int i = 0; i < 2 * n; ++i)
      if (pair_of[i] == -1) {
        slot = i;
        break;
      }
    if (slot == -1) {
      ShadowCode s;
      s.graph.add_vertex("v");
      s.graph.add_edge("a", "v", "v");
      s.passages["a"] = pair_of;
      out.push_back(s);
      return;
    }
    for (int j = slot + 1; j < 2 * n; ++j) {
      if (pair_of[j] != -1) continue;
      pair_of[slot] = pair_of[j] = next_id;
      rec(next_id + 1);
      pair_of[slot] = pair_of[j] = -1;
    }
  };
  rec(1);
  return out;
}

}  // namespace

TEST_SUITE("realizability") {

TEST_CASE("classical knots and links realize") {
  for (auto& c : {corpus::trefoil(), corpus::figure_eight(), corpus::hopf(), corpus::theta(),
                  corpus::theta_crossed(), corpus::handcuff_flat(),
                  corpus::two_triangles_hopf()}) {
    auto r = realizable(c);
    CHECK(r.realizable);
    REQUIRE(r.certificate.has_value());
    CHECK(verify_certificate(shadow(c), *r.certificate));
    CHECK(brute_force_realizable(c));
  }
}

TEST_CASE("properly virtual codes do not realize") {
  for (auto& c : {corpus::virtual_trefoil(), corpus::virtual_hopf(), corpus::unrealizable_loop(),
                  corpus::handcuff_crossed()}) {
    auto r = realizable(c);
    CHECK(!r.realizable);
    CHECK(!r.certificate.has_value());
    CHECK(!r.obstruction.empty());
    CHECK(!brute_force_realizable(c));
  }
}

TEST_CASE("a crossing-free K6 cannot be drawn flat") {
  auto r = realizable(corpus::k6_flat());
  CHECK(!r.realizable);
  CHECK(r.obstruction.find("K5") != std::string::npos);
}

TEST_CASE("single crossing between two loops is obstructed") {
  // Two closed curves meet transversally an even number of times in the plane.
  auto r = realizable(corpus::virtual_hopf());
  CHECK(!r.realizable);
}

TEST_CASE("budget exhaustion is distinct from a verdict") {
  CHECK_THROWS_AS(brute_force_realizable(corpus::k6_flat(), Rigidity::pliable, 1000),
                  BudgetError);
}

TEST_CASE("invalid codes are rejected") {
  GaussCode c = corpus::trefoil();
  c.signs.erase(1);
  CHECK_THROWS_AS(realizable(c), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_realizable(c), std::invalid_argument);
  CHECK_THROWS_AS(realizable(corpus::theta(), Rigidity::rigid), std::invalid_argument);
}

TEST_CASE("empty and trivial codes realize") {
  GaussCode empty;
  CHECK(realizable(empty).realizable);
  GaussCode dot;
  dot.graph.add_vertex("v");
  CHECK(realizable(dot).realizable);
  CHECK(brute_force_realizable(dot));
  GaussCode circle;
  circle.graph.add_vertex("v");
  circle.graph.add_edge("a", "v", "v");
  CHECK(realizable(circle).realizable);
  CHECK(brute_force_realizable(circle));
}

TEST_CASE("verify_certificate rejects wrong rotations") {
  // Parallel triple: the two end fans must be mirror images.
  ShadowCode s = shadow(corpus::theta());
  RealizationCertificate good;
  good.vertex_rotation["u"] = {{"a", false}, {"b", false}, {"c", false}};
  good.vertex_rotation["w"] = {{"a", true}, {"c", true}, {"b", true}};
  CHECK(verify_certificate(s, good));
  RealizationCertificate bad = good;
  bad.vertex_rotation["w"] = {{"a", true}, {"b", true}, {"c", true}};
  CHECK(!verify_certificate(s, bad));
  RealizationCertificate missing;
  missing.vertex_rotation["u"] = good.vertex_rotation["u"];
  CHECK(!verify_certificate(s, missing));
  RealizationCertificate mangled = good;
  mangled.vertex_rotation["w"] = {{"a", true}, {"c", true}, {"c", true}};
  CHECK(!verify_certificate(s, mangled));
}

TEST_CASE("rigid mode pins fans up to reflection") {
  GaussCode t = corpus::theta();
  t.graph.set_rotation("u", {{"a", false}, {"b", false}, {"c", false}});
  t.graph.set_rotation("w", {{"a", true}, {"c", true}, {"b", true}});
  auto r = realizable(t, Rigidity::rigid);
  CHECK(r.realizable);
  CHECK(r.rigid_coherent == true);
  CHECK(brute_force_realizable(t, Rigidity::rigid));

  // Same label order at both ends: only reachable by reflecting one vertex,
  // so the rigid verdict stays yes but coherence fails.
  t.graph.set_rotation("w", {{"a", true}, {"b", true}, {"c", true}});
  r = realizable(t, Rigidity::rigid);
  CHECK(r.realizable);
  CHECK(r.rigid_coherent == false);
  CHECK(brute_force_realizable(t, Rigidity::rigid));
}

TEST_CASE("degree four rigidity can forbid a layout") {
  GaussCode q;
  q.graph.add_vertex("u");
  q.graph.add_vertex("w");
  for (auto e : {"a", "b", "c", "d"}) q.graph.add_edge(e, "u", "w");
  q.graph.set_rotation("u", {{"a", false}, {"b", false}, {"c", false}, {"d", false}});
  // Mirror fan: fine.
  q.graph.set_rotation("w", {{"a", true}, {"d", true}, {"c", true}, {"b", true}});
  CHECK(realizable(q, Rigidity::rigid).realizable);
  CHECK(realizable(q, Rigidity::rigid).rigid_coherent == true);
  CHECK(brute_force_realizable(q, Rigidity::rigid));
  // Transposed fan: not a rotation or reflection of the mirror order.
  q.graph.set_rotation("w", {{"a", true}, {"c", true}, {"b", true}, {"d", true}});
  auto r = realizable(q, Rigidity::rigid);
  CHECK(!r.realizable);
  CHECK(!brute_force_realizable(q, Rigidity::rigid));
  // Pliable mode shrugs.
  CHECK(realizable(q).realizable);
  CHECK(brute_force_realizable(q));
}

TEST_CASE("reduction and exhaustive search agree on small one-loop shadows") {
  for (int n = 1; n <= 4; ++n) {
    for (auto& s : one_loop_shadows(n)) {
      CAPTURE(n);
      auto r = realizable(s);
      bool brute = brute_force_realizable(s);
      CHECK(r.realizable == brute);
      if (r.realizable) CHECK(verify_certificate(s, *r.certificate));
    }
  }
}

TEST_CASE("reduction and exhaustive search agree on random multigraph codes") {
  testing::Rng rng(77001);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    GaussCode c = testing::random_graph_code(rng, 5);
    bool brute;
    try {
      brute = brute_force_realizable(c);
    } catch (const BudgetError&) {
      continue;
    }
    auto r = realizable(c);
    CAPTURE(serialize_vsg({"rnd", c}));
    CHECK(r.realizable == brute);
    if (r.realizable) CHECK(verify_certificate(shadow(c), *r.certificate));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("rigid and pliable verdicts are monotone") {
  testing::Rng rng(77002);
  for (int t = 0; t < 60; ++t) {
    GaussCode c = testing::random_graph_code(rng, 4);
    if (!c.graph.has_rotations()) {
      // Give every vertex a random stored fan.
      for (auto& v : c.graph.vertices()) {
        auto ends = c.graph.incident_ends(v);
        std::shuffle(ends.begin(), ends.end(), rng);
        c.graph.set_rotation(v, ends);
      }
    }
    auto rigid = realizable(c, Rigidity::rigid);
    if (rigid.realizable) CHECK(realizable(c).realizable);
  }
}

}
