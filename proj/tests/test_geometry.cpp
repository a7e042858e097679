#include <doctest.h>

#include <set>

#include "polyalg/generate.hpp"
#include "shapes.hpp"

using namespace polyalg;

TEST_CASE("vertex and edge sets") {
  CHECK(shapes::single_cell().vertices().size() == 4);
  CHECK(shapes::single_cell().edges().size() == 4);
  CHECK(shapes::l_tromino().vertices().size() == 8);
  CHECK(shapes::ring33().vertices().size() == 16);
}

TEST_CASE("interval cells") {
  CHECK(interval_cells({{0, 0}, {1, 1}}) == std::vector<Cell>{{0, 0}});
  CHECK(interval_cells({{0, 0}, {3, 1}}) == std::vector<Cell>{{0, 0}, {1, 0}, {2, 0}});
  CHECK(interval_cells({{0, 0}, {2, 2}}).size() == 4);
  CHECK_THROWS_AS((void)interval_cells({{0, 0}, {3, 0}}), Error);
}

namespace {

// independent oracle: scan every proper interval inside the bounding box
std::vector<Interval> inner_intervals_brute(const Polyomino& p) {
  std::vector<Interval> out;
  GridPoint lo = p.min_corner(), hi = p.max_corner();
  for (int x1 = lo.x; x1 <= hi.x; ++x1)
    for (int y1 = lo.y; y1 <= hi.y; ++y1)
      for (int x2 = x1 + 1; x2 <= hi.x; ++x2)
        for (int y2 = y1 + 1; y2 <= hi.y; ++y2) {
          Interval iv{{x1, y1}, {x2, y2}};
          bool inside = true;
          for (const auto& c : interval_cells(iv))
            if (!p.contains(c)) inside = false;
          if (inside) out.push_back(iv);
        }
  return out;
}

}  // namespace

TEST_CASE("inner intervals") {
  CHECK(inner_intervals(shapes::single_cell()).size() == 1);
  CHECK(inner_intervals(shapes::l_tromino()).size() == 5);
  CHECK(inner_intervals(shapes::ring33()).size() == 20);

  SUBCASE("exhaustive against the bounding-box scan") {
    for (const auto& p : enumerate_polyominoes(8)) {
      auto got = inner_intervals(p);
      auto want = inner_intervals_brute(p);
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("maximal blocks") {
  auto strip = maximal_blocks(shapes::strip(3), Orientation::horizontal);
  REQUIRE(strip.size() == 1);
  CHECK(strip[0].rank == 3);

  CHECK(maximal_blocks(shapes::ring33(), Orientation::horizontal).size() == 2);
  CHECK(maximal_blocks(shapes::ring33(), Orientation::vertical).size() == 2);
  for (Orientation o : {Orientation::horizontal, Orientation::vertical})
    for (const auto& b : maximal_blocks(shapes::ring33(), o)) CHECK(b.rank == 3);

  CHECK(maximal_blocks(shapes::single_cell(), Orientation::horizontal).empty());

  SUBCASE("blocks partition and contain only cells of P") {
    for (const auto& p : enumerate_polyominoes(6))
      for (Orientation o : {Orientation::horizontal, Orientation::vertical})
        for (const auto& b : maximal_blocks(p, o))
          for (const auto& c : b.cells()) CHECK(p.contains(c));
  }
}

TEST_CASE("maximal edge intervals") {
  auto single_h = maximal_edge_intervals(shapes::single_cell(), Orientation::horizontal);
  REQUIRE(single_h.size() == 2);
  CHECK(single_h[0].hi.x - single_h[0].lo.x == 1);

  auto domino_h = maximal_edge_intervals(shapes::strip(2), Orientation::horizontal);
  REQUIRE(domino_h.size() == 2);
  CHECK(domino_h[0].hi.x - domino_h[0].lo.x == 2);

  // the ring's four horizontal lines each carry one full run
  auto ring_h = maximal_edge_intervals(shapes::ring33(), Orientation::horizontal);
  CHECK(ring_h.size() == 4);

  SUBCASE("every cell edge lies in exactly one maximal interval per orientation") {
    for (const auto& p : enumerate_polyominoes(5)) {
      auto eis = maximal_edge_intervals(p, Orientation::horizontal);
      for (const auto& e : p.edges()) {
        if (e.a.y != e.b.y) continue;
        int hits = 0;
        for (const auto& ei : eis)
          if (ei.contains(e.a) && ei.contains(e.b)) ++hits;
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("vertex count bound") {
  for (const auto& p : enumerate_polyominoes(5)) {
    CHECK(p.rank() >= 1);
    CHECK(static_cast<int>(p.vertices().size()) <= 4 * p.rank());
  }
  // equality iff no two cells share a vertex: a single cell qualifies
  CHECK(shapes::single_cell().vertices().size() == 4);
}

TEST_CASE("transforms") {
  auto p = shapes::l_tromino();
  for (int id = 0; id < 8; ++id) {
    Transform t{id};
    auto q = transformed(p, t);
    CHECK(q.rank() == p.rank());
    CHECK(canonical_form(q) == canonical_form(p));
    // inverse really inverts on points
    GridPoint v{3, -2};
    CHECK(t.inverse().point(t.point(v)) == v);
  }
}
