#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "polyalg/errors.hpp"

namespace polyalg {

/// Lattice point. Comparison is lexicographic (x, then y), which is also the
/// base total order used by the monomial orders.
struct GridPoint {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
  constexpr GridPoint operator+(GridPoint o) const { return {x + o.x, y + o.y}; }
  constexpr GridPoint operator-(GridPoint o) const { return {x - o.x, y - o.y}; }
};

/// Componentwise partial order p <= q.
constexpr bool below_eq(GridPoint p, GridPoint q) { return p.x <= q.x && p.y <= q.y; }

/// Unit lattice cell identified by its lower-left corner.
struct Cell {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
  constexpr GridPoint lower_left() const { return {x, y}; }
  constexpr GridPoint upper_right() const { return {x + 1, y + 1}; }
  constexpr GridPoint upper_left() const { return {x, y + 1}; }
  constexpr GridPoint lower_right() const { return {x + 1, y}; }
  constexpr std::array<GridPoint, 4> corners() const {
    return {lower_left(), lower_right(), upper_left(), upper_right()};
  }
};

/// Undirected unit edge between two lattice points; kept with a < b.
struct Edge {
  GridPoint a, b;
  Edge() = default;
  Edge(GridPoint p, GridPoint q) : a(p < q ? p : q), b(p < q ? q : p) {}
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Orientation { horizontal, vertical };

/// Lattice interval [lo, hi] (all points p with lo <= p <= hi componentwise).
struct Interval {
  GridPoint lo, hi;
  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
  constexpr bool proper() const { return lo.x < hi.x && lo.y < hi.y; }
  constexpr bool contains(GridPoint p) const { return below_eq(lo, p) && below_eq(p, hi); }
  // diagonal corners are lo, hi; anti-diagonal corners (proper intervals only):
  constexpr GridPoint anti_lo() const { return {lo.x, hi.y}; }  // upper left
  constexpr GridPoint anti_hi() const { return {hi.x, lo.y}; }  // lower right
  constexpr std::array<GridPoint, 4> corner_points() const {
    return {lo, hi, anti_lo(), anti_hi()};
  }
};

/// Maximal straight run of cells of rank >= 2 inside a polyomino.
struct Block {
  Cell first, last;  // extremal cells, first <= last
  Orientation orient = Orientation::horizontal;
  int rank = 0;
  std::vector<Cell> cells() const;
  std::vector<GridPoint> vertex_set() const;
};

/// Maximal run of collinear cell edges: endpoints in horizontal or vertical position.
struct EdgeInterval {
  GridPoint lo, hi;
  Orientation orient = Orientation::horizontal;
  friend constexpr auto operator<=>(const EdgeInterval&, const EdgeInterval&) = default;
  bool contains(GridPoint p) const {
    if (orient == Orientation::horizontal)
      return p.y == lo.y && lo.x <= p.x && p.x <= hi.x;
    return p.x == lo.x && lo.y <= p.y && p.y <= hi.y;
  }
};

std::vector<GridPoint> vertex_set(std::span<const Cell> cells);
std::vector<Edge> edge_set(std::span<const Cell> cells);

/// Finite edge-connected set of cells. Immutable after construction;
/// the cell list is sorted and vertex/edge sets are precomputed.
class Polyomino {
public:
  Polyomino() = default;  // empty placeholder, only valid as an assignment target
  explicit Polyomino(std::vector<Cell> cells);

  int rank() const { return static_cast<int>(cells_.size()); }
  const std::vector<Cell>& cells() const { return cells_; }
  bool contains(Cell c) const;
  bool contains_point(GridPoint v) const;
  bool contains_edge(const Edge& e) const;
  const std::vector<GridPoint>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  GridPoint min_corner() const { return min_; }
  GridPoint max_corner() const { return max_; }  // upper-right of bounding box cells

  /// Copy with the given cells removed (must remain connected and non-empty).
  Polyomino without(std::span<const Cell> removed) const;
  /// Copy translated so min x = min y = 0.
  Polyomino translated_to_origin() const;

private:
  std::vector<Cell> cells_;
  std::vector<GridPoint> vertices_;
  std::vector<Edge> edges_;
  GridPoint min_{}, max_{};
};

std::pair<std::vector<GridPoint>, std::vector<Edge>> vertex_edge_sets(const Polyomino& p);

/// All cells whose closed square lies in the proper interval `iv`.
std::vector<Cell> interval_cells(const Interval& iv);

/// All proper intervals whose cell interval lies wholly in `p`,
/// in lexicographic (lo, hi) order.
std::vector<Interval> inner_intervals(const Polyomino& p);

std::vector<Block> maximal_blocks(const Polyomino& p, Orientation orient);

std::vector<EdgeInterval> maximal_edge_intervals(const Polyomino& p, Orientation orient);

/// One of the 8 dihedral symmetries of the lattice.
struct Transform {
  int id = 0;  // 0..3 rotation by 90*id CCW; 4..7 reflection x -> -x then rotation
  GridPoint point(GridPoint p) const;
  Cell cell(Cell c) const;
  Transform inverse() const;
};

/// Transformed copy, translated back to the origin.
Polyomino transformed(const Polyomino& p, const Transform& t);

/// Minimum over the 8 transforms of the translated sorted cell list.
std::vector<Cell> canonical_form(const Polyomino& p);

}  // namespace polyalg
