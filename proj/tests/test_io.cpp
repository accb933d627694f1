#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <regex>
#include <sstream>

#include "dowker/error.hpp"
#include "dowker/io.hpp"
#include "dowker/verify.hpp"

using namespace dowker;

namespace {

using L = std::vector<std::string>;

const char* kRunningCxt =
    "B\n"
    "running example\n"
    "4\n"
    "6\n"
    "\n"
    "a\nb\nc\nd\n"
    "0\n1\n2\n3\n4\n5\n"
    "XXX..X\n"
    "...XXX\n"
    ".X..XX\n"
    "XXX...\n";

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Mismatch;
}

std::size_t count_matches(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                                std::sregex_iterator()));
}

const std::regex kNode(R"(\n\s*n\d+ \[label=)");
const std::regex kEdge(R"(n\d+ -> n\d+;)");

}  // namespace

TEST_CASE("running example in Burmeister format") {
  const auto ctx = parse_cxt(kRunningCxt);
  CHECK(ctx == running_example());
}

TEST_CASE("bundled data file") {
  std::ifstream in(DOWKER_DATA_DIR "/running_example.cxt");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(parse_cxt(ss.str()) == running_example());
}

TEST_CASE("name line may be omitted or empty") {
  CHECK(parse_cxt("B\n2\n1\n\ng\nh\nm\nX\n.\n").num_objects() == 2);
  CHECK(parse_cxt("B\n\n2\n1\n\ng\nh\nm\nX\n.\n").incident(0, 0));
  CHECK(parse_cxt("B\n7\n2\n1\n\ng\nh\nm\nX\n.\n").objects() == L{"g", "h"});
}

TEST_CASE("empty context") {
  const auto ctx = parse_cxt("B\n\n0\n0\n\n");
  CHECK(ctx.num_objects() == 0);
  CHECK(ctx.num_attributes() == 0);
  CHECK(parse_csv("", true).num_objects() == 0);
}

TEST_CASE("row of wrong length") {
  const std::string bad = "B\n\n2\n2\n\ng\nh\nm\nn\nX.\nX\n";
  try {
    parse_cxt(bad);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("line 11") != std::string::npos);
  }
}

TEST_CASE("malformed Burmeister input") {
  CHECK(code_of([] { parse_cxt("A\n\n1\n1\n\ng\nm\nX\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_cxt("B\n\n1\n1\n\ng\nm\nQ\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_cxt("B\n\n2\n1\n\ng\nh\nm\nX\n"); }) == Errc::DimensionMismatch);
  CHECK(code_of([] { parse_cxt("B\n\n1\n1\n\ng\nm\nX\nextra\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_cxt("B\nname\nfour\n1\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_cxt("B\n\n1\n1\n\ng\nm\nX\nX\n"); }) == Errc::ParseError);
}

TEST_CASE("csv with and without a header") {
  const auto ctx = parse_csv(",0,1,2,3,4,5\na,1,1,1,0,0,1\nb,0,0,0,1,1,1\nc,0,1,0,0,1,1\nd,1,1,1,0,0,0\n");
  CHECK(ctx == running_example());
  const auto bare = parse_csv("1,0\n0,1\n", false);
  CHECK(bare.objects() == L{"g0", "g1"});
  CHECK(bare.attributes() == L{"m0", "m1"});
  CHECK(bare.incident(1, 1));
  CHECK(code_of([] { parse_csv(",x\ng,2\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_csv(",x,y\ng,1\n"); }) == Errc::ParseError);
}

TEST_CASE("export and reparse round trip") {
  for (std::size_t i = 0; i < 200; ++i) {
    const auto ctx = random_context(context_seed(61, i), 8, 8, i % 2 == 0);
    CHECK(parse_cxt(write_cxt(ctx)) == ctx);
    CHECK(parse_cxt(write_cxt(ctx, "named")) == ctx);
    CHECK(parse_csv(write_csv(ctx)) == ctx);
  }
  CHECK(parse_cxt(write_cxt(running_example())) == running_example());
}

TEST_CASE("concept lattice DOT") {
  const auto lattice = enumerate_concepts(running_example());
  const auto dot = lattice_dot(lattice);
  CHECK(validate_dot(dot).empty());
  CHECK(count_matches(dot, kNode) == 10);
  CHECK(count_matches(dot, kEdge) == hasse(lattice.order()).size());
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("\"ad | 012\"") != std::string::npos);
  CHECK(lattice_dot(lattice) == dot);

  const auto reduced = lattice_dot(lattice, true);
  CHECK(validate_dot(reduced).empty());
  CHECK(reduced.find("\"d | 02\"") != std::string::npos);
}

TEST_CASE("cosheaf DOT") {
  const auto dot = cosheaf_dot(dowker_cosheaf(running_example()));
  CHECK(validate_dot(dot).empty());
  CHECK(count_matches(dot, kNode) == 11);
  CHECK(count_matches(dot, std::regex("style=bold")) == 8);
  CHECK(dot.find("\"ab | 5\", style=solid") != std::string::npos);
}

TEST_CASE("poset DOT on random inputs is valid") {
  for (std::size_t i = 0; i < 50; ++i) {
    const auto ctx = random_context(context_seed(62, i), 6, 6, true);
    CHECK(validate_dot(poset_dot(enumerate_concepts(ctx).order())).empty());
    CHECK(validate_dot(lattice_dot(enumerate_concepts(ctx), true)).empty());
    CHECK(validate_dot(cosheaf_dot(dowker_cosheaf(ctx))).empty());
    CHECK(validate_dot(poset_dot(face_poset(dowker_complex(ctx), true), "with \"quotes\"")).empty());
  }
}

TEST_CASE("DOT validator") {
  CHECK(validate_dot("digraph { a -> b; }").empty());
  CHECK(validate_dot("strict graph g { a -- b -- c [color=red]; node [shape=box] }").empty());
  CHECK(validate_dot("digraph { subgraph s { rank=same; x; y } x -> { y z } } // done").empty());
  CHECK(validate_dot("/* c */ digraph \"n\" { \"a b\" -> c:port; }").empty());
  CHECK_FALSE(validate_dot("digraph { a -- b }").empty());
  CHECK_FALSE(validate_dot("graph { a -> b }").empty());
  CHECK_FALSE(validate_dot("digraph { a -> }").empty());
  CHECK_FALSE(validate_dot("digraph { a [label=] }").empty());
  CHECK_FALSE(validate_dot("digraph { \"open }").empty());
  CHECK_FALSE(validate_dot("digraph { a } extra").empty());
  CHECK_FALSE(validate_dot("tree { }").empty());
}

TEST_CASE("JSON shapes") {
  const auto ctx = running_example();
  const auto c = to_json(ctx);
  CHECK(c["incidence"][0] == Json::array({1, 1, 1, 0, 0, 1}));
  const auto lattice = to_json(enumerate_concepts(ctx));
  CHECK(lattice["concepts"].size() == 10);
  CHECK(lattice["covers"].size() == 14);
  CHECK(lattice["reduced"].size() == 10);
  const auto h = to_json(collapse(ctx));
  CHECK(h["edges"].size() == 5);
  CHECK(h["edges"][0] == Json::array({"a", "d"}));
  const auto asc = to_json(dowker_complex(ctx));
  CHECK(asc["facets"] == Json::parse(R"([["a","b","c"],["a","c","d"]])"));
  const auto cs = to_json(dowker_cosheaf(ctx));
  CHECK(cs["cells"].size() == 12);
  CHECK(cs["cells"][0].contains("is_concept"));
  const auto h0 = to_json(sheaf_cohomology(ctx), ctx, true);
  CHECK(h0["betti"] == Json::array({6, 0, 0}));
  CHECK(h0["differentials"][0].size() == 9);
  CHECK(to_json(verify_corollary45(ctx))["holds"] == true);
}
