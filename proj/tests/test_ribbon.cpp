#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "curve_spectra/io.hpp"
#include "curve_spectra/ribbon.hpp"
#include "fixtures.hpp"

using namespace curve_spectra;
using cstest::f05;
using cstest::f05_with_punctures;

namespace {

Configuration one_vertex_aabb() {
  Configuration c;
  c.vertices = 1;
  c.rotation = {{0, 1, 2, 3}};
  c.pairing = {1, 0, 3, 2};  // edges {0,1} and {2,3}: adjacent darts share a label
  c.labels = {Curve::Alpha, Curve::Beta};
  c.regions = {{0, 0, {0}}};
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("F05 validates cleanly") {
  REQUIRE(validate(f05()).ok());
}

TEST_CASE("F05 with a puncture removed lands on a sporadic surface") {
  Configuration c = f05_with_punctures({1, 1, 1, 1});
  ValidationReport rep = validate(c);
  REQUIRE_FALSE(rep.ok());
  bool sporadic = false;
  for (const auto& v : rep.violations) sporadic |= (v.code == "sporadic");
  REQUIRE(sporadic);
  REQUIRE(surface_type(c) == SurfaceType{0, 4});
}

TEST_CASE("non-alternating rotation is rejected") {
  ValidationReport rep = validate(one_vertex_aabb());
  REQUIRE_FALSE(rep.ok());
  bool alt = false;
  for (const auto& v : rep.violations) alt |= (v.code == "alternation");
  REQUIRE(alt);
}

TEST_CASE("surface type of F05 and variants") {
  REQUIRE(surface_type(f05()) == SurfaceType{0, 5});

  Configuration c = f05();
  c.regions[0].genus = 1;
  c.regions[0].punctures = 0;
  REQUIRE(surface_type(c) == SurfaceType{1, 3});
  REQUIRE(validate(c).ok());

  REQUIRE(surface_type(f05()).chi() < 0);
}

TEST_CASE("face cycles of F05 are four bigon-shaped faces") {
  Configuration c = f05();
  DartIndex ix = build_index(c);
  FaceSet fs = trace_faces(c, ix);
  REQUIRE(fs.count() == 4);
  std::vector<std::vector<int>> expected = {{0, 7}, {1, 6}, {2, 5}, {3, 4}};
  for (int f = 0; f < 4; ++f) {
    REQUIRE(fs.length(f) == 2);
    std::vector<int> sorted = fs.darts[f];
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(sorted == expected[f]);
    // one ALPHA side, one BETA side
    REQUIRE(ix.label(c, fs.darts[f][0]) != ix.label(c, fs.darts[f][1]));
    REQUIRE(side_profile(c, ix, fs.darts[f]) == 2);
  }
  int total = 0;
  for (int f = 0; f < fs.count(); ++f) total += fs.length(f);
  REQUIRE(total == 4 * c.vertices);  // every dart lies on exactly one face side
}

TEST_CASE("edge and boundary-cycle counts match the partition identities") {
  Configuration c = f05();
  DartIndex ix = build_index(c);
  REQUIRE(static_cast<int>(ix.edges.size()) == 2 * c.vertices);
  FaceSet fs = trace_faces(c, ix);
  int cycles = 0;
  for (const auto& r : c.regions) cycles += r.boundary_count();
  REQUIRE(cycles == fs.count());
}

TEST_CASE("encode/decode round trip is the identity on F05") {
  Configuration c = f05();
  REQUIRE(decode(encode(c)) == c);
}

TEST_CASE("shipped F05 fixture is byte-identical to the canonical encoding") {
  std::string bytes = slurp(std::string(CS_FIXTURES_DIR) + "/F05.json");
  Configuration c = decode(bytes);
  REQUIRE(c == f05());
  REQUIRE(encode(c) == bytes);
  REQUIRE(validate(c).ok());
}

TEST_CASE("decode reports missing fields by name") {
  json j = to_json(f05());
  j.erase("regions");
  try {
    from_json(j);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    REQUIRE(e.field == "regions");
  }
}

TEST_CASE("decode reports parse errors with byte offsets") {
  try {
    decode("{\"version\": 1,,}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.byte > 0);
  }
}

TEST_CASE("a pairing with a fixed point decodes but fails validation") {
  json j = to_json(f05());
  j["pairing"] = {0, 7, 6, 5, 4, 3, 2, 1};  // dart 0 paired with itself
  Configuration c = from_json(j);
  ValidationReport rep = validate(c);
  REQUIRE_FALSE(rep.ok());
  bool fixed_point = false;
  for (const auto& v : rep.violations)
    fixed_point |= (v.code == "pairing" && v.message.find("fixed point") != std::string::npos);
  REQUIRE(fixed_point);
}

TEST_CASE("split curves are rejected") {
  // Re-pair the alpha edges into two loops: 0<->2 and 4<->6 keeps alternation
  // but makes ALPHA two components.  Edges re-sort to {0,2},{1,7},{3,5},{4,6},
  // so the label array is B,A on the last two slots.
  Configuration c = f05();
  c.pairing = {2, 7, 0, 5, 6, 3, 4, 1};
  c.labels = {Curve::Alpha, Curve::Beta, Curve::Beta, Curve::Alpha};
  ValidationReport rep = validate(c);
  REQUIRE_FALSE(rep.ok());
  bool curve = false;
  for (const auto& v : rep.violations) curve |= (v.code == "curve");
  REQUIRE(curve);
}

TEST_CASE("DOT export mentions every vertex and edge") {
  std::string dot = to_dot(f05());
  REQUIRE(dot.find("v0 -- v1") != std::string::npos);
  REQUIRE(dot.find("color=red") != std::string::npos);
  REQUIRE(dot.find("color=blue") != std::string::npos);
  REQUIRE(dot.find("region 0") != std::string::npos);
}
