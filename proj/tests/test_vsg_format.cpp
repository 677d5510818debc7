#include <filesystem>

#include "doctest.h"
#include "support/corpus.hpp"
#include "vsg/vsg_format.hpp"

using namespace vsg;

TEST_SUITE("vsg_format") {

TEST_CASE("parses a knot file") {
  auto r = parse_vsg(
      "# classical trefoil\n"
      "graph trefoil\n"
      "vertices v\n"
      "edge a: v -> v : O1+ U2+ O3+ U1+ O2+ U3+\n");
  REQUIRE(r.ok);
  CHECK(r.doc.name == "trefoil");
  CHECK(r.doc.code == corpus::trefoil());
}

TEST_CASE("parses rotations") {
  auto r = parse_vsg(
      "graph theta\n"
      "vertices u w\n"
      "edge a: u -> w :\n"
      "edge b: u -> w :\n"
      "edge c: u -> w :\n"
      "rot u: a.out b.out c.out\n"
      "rot w: a.in c.in b.in\n");
  REQUIRE(r.ok);
  CHECK(r.doc.code.graph.has_rotations());
  CHECK(r.doc.code.graph.rotation("w") ==
        std::vector<EndRef>{{"a", true}, {"c", true}, {"b", true}});
}

TEST_CASE("reports sign conflicts with the offending line") {
  auto r = parse_vsg(
      "graph bad\n"
      "vertices v\n"
      "edge a: v -> v : O1+ U1-\n");
  CHECK(!r.ok);
  REQUIRE(!r.errors.empty());
  CHECK(r.errors[0].line == 3);
}

TEST_CASE("rejects malformed input") {
  CHECK(!parse_vsg("nonsense line\n").ok);
  CHECK(!parse_vsg("graph g\nvertices v\nedge a: v -> v : O1+\n").ok);   // unpaired
  CHECK(!parse_vsg("graph g\nvertices v\nedge a: v -> v : Ox+\n").ok);   // bad token
  CHECK(!parse_vsg("graph g\nvertices v\nedge a: v -> zz :\n").ok);      // unknown vertex
  CHECK(!parse_vsg("graph g\nvertices v v\n").ok);                       // dup vertex
  CHECK(!parse_vsg("graph g\nvertices v\nrot v:\nedge a: v -> v :\n").ok);  // bad rotation
  CHECK(!parse_vsg("graph g\ngraph h\n").ok);
}

TEST_CASE("builders round trip through text") {
  for (auto& c : {corpus::trefoil(), corpus::figure_eight(), corpus::hopf(),
                  corpus::theta_crossed(), corpus::handcuff_crossed(), corpus::k6_flat(),
                  corpus::two_triangles_hopf()}) {
    VsgDocument d{"g", c};
    auto r = parse_vsg(serialize_vsg(d));
    REQUIRE(r.ok);
    CHECK(r.doc == d);
  }
}

TEST_CASE("rotations round trip through text") {
  GaussCode c = corpus::theta();
  c.graph.set_rotation("u", {{"a", false}, {"b", false}, {"c", false}});
  c.graph.set_rotation("w", {{"a", true}, {"c", true}, {"b", true}});
  VsgDocument d{"theta", c};
  auto r = parse_vsg(serialize_vsg(d));
  REQUIRE(r.ok);
  CHECK(r.doc == d);
}

TEST_CASE("corpus files parse and match the builders") {
  struct Row {
    const char* file;
    GaussCode code;
  };
  const Row rows[] = {
      {"trefoil.vsg", corpus::trefoil()},
      {"figure_eight.vsg", corpus::figure_eight()},
      {"virtual_trefoil.vsg", corpus::virtual_trefoil()},
      {"hopf.vsg", corpus::hopf()},
      {"virtual_hopf.vsg", corpus::virtual_hopf()},
      {"unrealizable_loop.vsg", corpus::unrealizable_loop()},
      {"theta.vsg", corpus::theta()},
      {"theta_crossed.vsg", corpus::theta_crossed()},
      {"handcuff_flat.vsg", corpus::handcuff_flat()},
      {"handcuff_crossed.vsg", corpus::handcuff_crossed()},
      {"k6_flat.vsg", corpus::k6_flat()},
      {"two_triangles_hopf.vsg", corpus::two_triangles_hopf()},
  };
  for (auto& row : rows) {
    CAPTURE(row.file);
    auto r = parse_vsg_file(corpus::corpus_file(row.file));
    REQUIRE(r.ok);
    CHECK(r.doc.code == row.code);
  }
}

TEST_CASE("serialization of corpus files is byte-stable") {
  namespace fs = std::filesystem;
  for (auto& entry : fs::directory_iterator(corpus::corpus_dir())) {
    if (entry.path().extension() != ".vsg") continue;
    CAPTURE(entry.path().string());
    auto r = parse_vsg_file(entry.path().string());
    REQUIRE(r.ok);
    auto again = parse_vsg(serialize_vsg(r.doc));
    REQUIRE(again.ok);
    CHECK(again.doc == r.doc);
    CHECK(serialize_vsg(again.doc) == serialize_vsg(r.doc));
  }
}

TEST_CASE("missing file reports a diagnostic") {
  auto r = parse_vsg_file("/nonexistent/file.vsg");
  CHECK(!r.ok);
  REQUIRE(!r.errors.empty());
  CHECK(r.errors[0].line == 0);
}

}
