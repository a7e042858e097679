#include <doctest.h>

#include <fstream>
#include <sstream>

#include "polyalg/generate.hpp"
#include "polyalg/io.hpp"
#include "shapes.hpp"

using namespace polyalg;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TESTS_DIR) + "/golden/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("grid parsing") {
  auto p = parse_input("##\n#.");
  CHECK(p.cells() == std::vector<Cell>{{0, 0}, {0, 1}, {1, 1}});

  auto single = parse_input("{\"cells\":[[0,0]]}");
  CHECK(single.rank() == 1);

  CHECK_THROWS_AS((void)parse_input("#.#"), Error);        // disconnected
  CHECK_THROWS_AS((void)parse_input(""), Error);           // empty
  CHECK_THROWS_AS((void)parse_input("..\n.."), Error);     // empty again
  CHECK_THROWS_AS((void)parse_input("#x"), Error);         // syntax
  CHECK_THROWS_AS((void)parse_input("{\"cells\":[[0,0],[0,0]]}"), Error);  // duplicate
  CHECK_THROWS_AS((void)parse_input("{\"cells\":[[0]]}"), Error);
  CHECK_THROWS_AS((void)parse_input("{\"zells\":[]}"), Error);

  SUBCASE("line and column are reported") {
    try {
      (void)parse_input("##\n#?");
      FAIL("expected a syntax error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
      CHECK(std::string(e.what()).find("column 2") != std::string::npos);
    }
  }

  SUBCASE("translation to the origin") {
    auto q = parse_input("{\"cells\":[[5,7],[6,7]]}");
    CHECK(q.cells() == std::vector<Cell>{{0, 0}, {1, 0}});
  }
}

TEST_CASE("ascii rendering") {
  CHECK(render_ascii(shapes::single_cell()) == "#");
  CHECK(render_ascii(shapes::ring33()) == "###\n#.#\n###");
}

TEST_CASE("round trip over the corpus") {
  for (const auto& p : enumerate_polyominoes(6))
    CHECK(parse_input(render_ascii(p)).cells() == p.cells());
  for (const auto& p : enumerate_closed_paths(12))
    CHECK(parse_input(render_ascii(p)).cells() == p.cells());
  for (const auto& p : enumerate_polyominoes(5))
    CHECK(parse_input(cells_json(p)).cells() == p.cells());
}

TEST_CASE("rook marker parsing") {
  auto rooks = parse_rooks("0,0;2,1");
  CHECK(rooks == std::vector<Cell>{{0, 0}, {2, 1}});
  CHECK(parse_rooks("").empty());
  CHECK_THROWS_AS((void)parse_rooks("1;2"), Error);
}

TEST_CASE("tikz and svg golden files") {
  std::vector<Cell> rooks{{1, 0}, {0, 1}, {2, 1}, {1, 2}};
  CHECK(render_tikz(shapes::ring33(), rooks) == slurp("ring33_rooks.tikz"));
  CHECK(render_svg(shapes::ring33(), rooks) == slurp("ring33_rooks.svg"));

  SUBCASE("structure of the svg") {
    auto svg = render_svg(shapes::ring33(), rooks);
    std::size_t rects = 0, circles = 0, pos = 0;
    while ((pos = svg.find("<rect", pos)) != std::string::npos) ++rects, ++pos;
    pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) ++circles, ++pos;
    CHECK(rects == 8);
    CHECK(circles == 4);
  }
}
