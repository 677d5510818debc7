#include <array>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support/corpus.hpp"
#include "vsg/experiments.hpp"
#include "vsg/realizability.hpp"

using namespace vsg;

namespace {

GaussCode circle() {
  GaussCode c;
  c.graph.add_vertex("v");
  c.graph.add_edge("a", "v", "v");
  return c;
}

GaussCode kinked() {
  GaussCode c = circle();
  c.passages["a"] = {{1, StrandRole::over}, {1, StrandRole::under}};
  c.signs[1] = 1;
  return c;
}

GaussCode without_passages(const GaussCode& code) {
  GaussCode flat = code;
  for (auto& [e, ps] : flat.passages) ps.clear();
  flat.signs.clear();
  return flat;
}

// Six points in convex position (staggered radii break the triple point of
// the regular hexagon), chords as straight segments, the earlier edge in
// e12 < e13 < ... order passing over. An independent route to a K6 diagram:
// none of random_k6_code's sampling or retry logic is involved.
GaussCode convex_k6() {
  std::array<double, 6> px{}, py{};
  for (int k = 0; k < 6; ++k) {
    double ang = 2 * std::numbers::pi * k / 6 + 0.05 * k;
    double rad = 1 + 0.03 * k;
    px[static_cast<std::size_t>(k)] = rad * std::cos(ang);
    py[static_cast<std::size_t>(k)] = rad * std::sin(ang);
  }
  GaussCode c;
  for (int i = 1; i <= 6; ++i) c.graph.add_vertex("v" + std::to_string(i));
  std::vector<std::string> names;
  std::vector<std::array<int, 2>> ev;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      ev.push_back({i, j});
      c.graph.add_edge(names.back(), "v" + std::to_string(i + 1),
                       "v" + std::to_string(j + 1));
    }
  std::vector<std::vector<std::pair<double, Passage>>> per(names.size());
  int id = 1;
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      if (ev[a][0] == ev[b][0] || ev[a][0] == ev[b][1] || ev[a][1] == ev[b][0] ||
          ev[a][1] == ev[b][1])
        continue;
      auto P = [&](int k) { return std::array<double, 2>{px[static_cast<std::size_t>(k)],
                                                         py[static_cast<std::size_t>(k)]}; };
      auto A0 = P(ev[a][0]), A1 = P(ev[a][1]), B0 = P(ev[b][0]), B1 = P(ev[b][1]);
      double d1x = A1[0] - A0[0], d1y = A1[1] - A0[1];
      double d2x = B1[0] - B0[0], d2y = B1[1] - B0[1];
      double det = d1x * d2y - d1y * d2x;
      if (std::abs(det) < 1e-12) continue;
      double rx = B0[0] - A0[0], ry = B0[1] - A0[1];
      double t = (rx * d2y - ry * d2x) / det;
      double u = (rx * d1y - ry * d1x) / det;
      if (!(t > 0 && t < 1 && u > 0 && u < 1)) continue;
      c.signs[id] = det > 0 ? 1 : -1;  // edge a over, oriented frame (da, db)
      per[a].push_back({t, {id, StrandRole::over}});
      per[b].push_back({u, {id, StrandRole::under}});
      ++id;
    }
  for (std::size_t s = 0; s < names.size(); ++s) {
    if (per[s].empty()) continue;
    std::sort(per[s].begin(), per[s].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [t, p] : per[s]) c.passages[names[s]].push_back(p);
  }
  return c;
}

HalfInt report_sum(const LinkReport& r) {
  HalfInt total;
  for (const auto& e : r.entries) total = total + e.lk;
  return total;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("link detection on the two-triangle pair") {
  auto rep = detect_links(corpus::two_triangles_hopf());
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].lk == HalfInt::whole(1));
  CHECK(rep.entries[0].certified);
  CHECK(rep.any_certified());

  auto flat = detect_links(without_passages(corpus::two_triangles_hopf()));
  REQUIRE(flat.entries.size() == 1);
  CHECK(flat.entries[0].lk == HalfInt::whole(0));
  CHECK(!flat.entries[0].certified);
  CHECK(!flat.any_certified());
}

TEST_CASE("virtualization deletes exactly the chosen crossings") {
  auto h = corpus::hopf();
  CHECK(virtualize(h, {}) == h);
  CHECK(linking_number(virtualize(h, {1}), "p", "q") == HalfInt::from_halves(1));
  CHECK(virtualize(h, {1, 2}) == without_passages(h));
  CHECK_THROWS_AS((void)virtualize(h, {9}), std::invalid_argument);
}

TEST_CASE("conway gordon parity on random straight-line drawings") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto c = random_k6_code(seed);
    CAPTURE(seed);
    CHECK(crossing_count(c) >= 3);  // K6 needs at least three crossings
    CHECK(conway_gordon_parity(c) == 1);
    CHECK(detect_links(c).any_certified());
  }
}

TEST_CASE("random k6 codes share the flat corpus graph and are seed-stable") {
  auto c = random_k6_code(7);
  CHECK(c.graph == corpus::k6_flat().graph);
  CHECK(c == random_k6_code(7));
  CHECK(c != random_k6_code(8));
  CHECK(realizable(c).realizable);
}

TEST_CASE("parity on a convex-position drawing") {
  auto c = convex_k6();
  REQUIRE(validate(c).empty());
  CHECK(crossing_count(c) == 15);  // one crossing per 4-subset of vertices
  CHECK(conway_gordon_parity(c) == 1);
}

TEST_CASE("parity rejects non-K6 and non-realizable input") {
  CHECK_THROWS_AS((void)conway_gordon_parity(corpus::theta()), std::invalid_argument);
  // the crossing-free K6 code: right graph, but no plane drawing exists
  CHECK_THROWS_AS((void)conway_gordon_parity(corpus::k6_flat()), std::invalid_argument);
}

TEST_CASE("one virtualization shifts each pairwise lk by at most a half") {
  auto c = random_k6_code(1);
  auto before = detect_links(c);
  for (int x : crossing_ids(c)) {
    auto after = detect_links(virtualize(c, {x}));
    REQUIRE(after.entries.size() == before.entries.size());
    for (std::size_t i = 0; i < after.entries.size(); ++i) {
      auto delta = after.entries[i].lk - before.entries[i].lk;
      CHECK(std::abs(delta.twice()) <= 1);
    }
  }
}

TEST_CASE("triangle-pair linking data survives standard moves") {
  auto c = random_k6_code(4);
  auto base = report_sum(detect_links(c));
  CHECK(conway_gordon_parity(c) == 1);
  for (int len = 1; len <= 3; ++len) {
    auto end = replay(random_trace(c, len, 40 + static_cast<std::uint64_t>(len),
                                   MoveSet::standard(), crossing_count(c) + 2));
    CHECK(report_sum(detect_links(end)) == base);
    if (realizable(end).realizable) CHECK(conway_gordon_parity(end) == 1);
  }
}

TEST_CASE("ivl1 witness on the random k6 drawings") {
  for (std::uint64_t seed : {0, 1}) {
    auto r = ivl1_witness(random_k6_code(seed));
    CAPTURE(seed);
    CHECK(!r.graph_planar);
    CHECK(r.odd_pair);
    CHECK(r.odd_pair_lk.is_odd_integer());
    CHECK(r.holds());
  }
}

TEST_CASE("ivl1 on the toy two-triangle pair") {
  auto r = ivl1_witness(corpus::two_triangles_hopf());
  CHECK(r.graph_planar);  // two disjoint triangles: not intrinsically linked
  CHECK(r.odd_pair);
  CHECK(r.odd_pair_lk == HalfInt::whole(1));
  REQUIRE(r.singletons.size() == 2);
  for (const auto& s : r.singletons) {
    CHECK(s.retains_link);
    CHECK(s.witness_lk == HalfInt::from_halves(1));  // the surviving half
  }
  CHECK(r.holds());
}

TEST_CASE("ivl1 rejects non-realizable codes") {
  CHECK_THROWS_AS((void)ivl1_witness(corpus::virtual_hopf()), std::invalid_argument);
  CHECK_THROWS_AS((void)ivl1_witness(corpus::unrealizable_loop()), std::invalid_argument);
}

TEST_CASE("vu pins the trefoil at two") {
  auto r = vu_report(corpus::trefoil(), 3);
  REQUIRE(r.upper.crossings.has_value());
  CHECK(r.upper.crossings->size() == 2);
  CHECK(!r.upper.budget_exceeded);
  REQUIRE(r.upper.trace.has_value());
  CHECK(canonical_key(replay(*r.upper.trace)) == canonical_key(circle()));
  REQUIRE(r.lower.size() == 3);
  for (const auto& e : r.lower) CHECK(e.certificate == "odd_writhe");
}

TEST_CASE("vu pins the figure eight at two") {
  auto r = vu_report(corpus::figure_eight(), 4);
  REQUIRE(r.upper.crossings.has_value());
  CHECK(r.upper.crossings->size() == 2);
  REQUIRE(r.lower.size() == 4);
  for (const auto& e : r.lower) CHECK(e.certificate == "odd_writhe");
}

TEST_CASE("vu on the unknot and a kinked unknot") {
  auto plain = vu_upper(circle(), 2);
  REQUIRE(plain.crossings.has_value());
  CHECK(plain.crossings->empty());

  auto k = vu_upper(kinked(), 1);
  REQUIRE(k.crossings.has_value());
  CHECK(k.crossings->empty());  // the kink unwinds without any virtualization

  auto lower = vu_lower_singletons(kinked());
  REQUIRE(lower.size() == 1);
  CHECK(lower[0].certificate.empty());  // singleton gives the circle back
}

TEST_CASE("vu upper is monotone in max size and budget") {
  auto t = corpus::trefoil();
  auto at2 = vu_upper(t, 2);
  auto at3 = vu_upper(t, 3);
  REQUIRE(at2.crossings.has_value());
  REQUIRE(at3.crossings.has_value());
  CHECK(at2.crossings->size() == at3.crossings->size());

  auto capped = vu_upper(t, 1);
  CHECK(!capped.crossings.has_value());  // no single virtualization unknots it
  CHECK(!capped.budget_exceeded);        // every candidate was refuted, not abandoned

  auto small = vu_upper(t, 2, 6, 500, 2);
  REQUIRE(small.crossings.has_value());
  CHECK(small.crossings->size() == 2);
}

TEST_CASE("vu requires a knot code") {
  CHECK_THROWS_AS((void)vu_upper(corpus::theta(), 1), std::invalid_argument);
  CHECK_THROWS_AS((void)vu_lower_singletons(corpus::hopf()), std::invalid_argument);
}

TEST_CASE("forbidden separation demo") {
  auto d = forbidden_separation_demo(0, 40);
  CHECK(d.first == corpus::handcuff_flat());
  CHECK(d.second == corpus::handcuff_crossed());
  CHECK(d.profiles_differ);
  CHECK(d.profiles_stable);
  CHECK(d.sequences_checked == 40);

  // nine members each: eight open-chain choices die, one two-component link
  CHECK(d.first_profile.size() == 9);
  CHECK(d.second_profile.size() == 9);
  CHECK(d.first_profile.count({HalfInt::whole(0)}) == 1);
  CHECK(d.second_profile.count({HalfInt::from_halves(1)}) == 1);
}

TEST_CASE("single forbidden moves keep the profile") {
  auto c = corpus::two_triangles_hopf();
  TLinkProfile base = t_link_profile(c);
  CHECK(base.count({HalfInt::whole(1)}) == 1);
  auto forb = MoveSet::none()
                  .with(MoveKind::F_over)
                  .with(MoveKind::F_under)
                  .with(MoveKind::F_knot);
  auto ns = neighbors(c, forb);
  REQUIRE(!ns.empty());
  for (const auto& n : ns) CHECK(t_link_profile(n.code) == base);
}

}  // TEST_SUITE
