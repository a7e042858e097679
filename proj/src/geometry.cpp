#include "polyalg/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyalg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::degenerate_interval: return "DegenerateInterval";
    case Errc::cell_not_in_polyomino: return "CellNotInPolyomino";
    case Errc::not_a_closed_path: return "NotAClosedPath";
    case Errc::no_decomposition: return "NoDecomposition";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::not_thin: return "NotThin";
    case Errc::not_simple_thin: return "NotSimpleThin";
    case Errc::wrong_case: return "WrongCase";
    case Errc::complement_not_simple: return "ComplementNotSimple";
    case Errc::not_from_w_configuration: return "NotFromWConfiguration";
    case Errc::has_zig_zag: return "HasZigZag";
    case Errc::out_of_scope_class: return "OutOfScopeClass";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::order_not_found: return "NotFound";
    case Errc::disconnected: return "Disconnected";
    case Errc::empty_input: return "Empty";
    case Errc::duplicate_cell: return "DuplicateCell";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::unknown_format: return "UnknownFormat";
    case Errc::integer_overflow: return "Overflow";
  }
  return "Unknown";
}

std::vector<Cell> Block::cells() const {
  std::vector<Cell> out;
  if (orient == Orientation::horizontal)
    for (int x = first.x; x <= last.x; ++x) out.push_back({x, first.y});
  else
    for (int y = first.y; y <= last.y; ++y) out.push_back({first.x, y});
  return out;
}

std::vector<GridPoint> Block::vertex_set() const {
  auto cs = cells();
  return polyalg::vertex_set(cs);
}

std::vector<GridPoint> vertex_set(std::span<const Cell> cells) {
  std::vector<GridPoint> v;
  v.reserve(cells.size() * 4);
  for (const auto& c : cells)
    for (auto p : c.corners()) v.push_back(p);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Edge> edge_set(std::span<const Cell> cells) {
  std::vector<Edge> e;
  e.reserve(cells.size() * 4);
  for (const auto& c : cells) {
    e.emplace_back(c.lower_left(), c.lower_right());
    e.emplace_back(c.upper_left(), c.upper_right());
    e.emplace_back(c.lower_left(), c.upper_left());
    e.emplace_back(c.lower_right(), c.upper_right());
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

namespace {

bool cells_connected(const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  std::set<Cell> todo(cells.begin(), cells.end());
  std::vector<Cell> stack{cells.front()};
  todo.erase(cells.front());
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Cell n : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}}) {
      auto it = todo.find(n);
      if (it != todo.end()) {
        todo.erase(it);
        stack.push_back(n);
      }
    }
  }
  return todo.empty();
}

}  // namespace

Polyomino::Polyomino(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) fail(Errc::empty_input, "polyomino must contain at least one cell");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  if (!cells_connected(cells_)) fail(Errc::disconnected, "cells are not edge-connected");
  vertices_ = vertex_set(cells_);
  edges_ = edge_set(cells_);
  min_ = {cells_.front().x, cells_.front().y};
  max_ = min_ + GridPoint{1, 1};
  for (const auto& c : cells_) {
    min_.x = std::min(min_.x, c.x);
    min_.y = std::min(min_.y, c.y);
    max_.x = std::max(max_.x, c.x + 1);
    max_.y = std::max(max_.y, c.y + 1);
  }
}

bool Polyomino::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool Polyomino::contains_point(GridPoint v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Polyomino::contains_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Polyomino Polyomino::without(std::span<const Cell> removed) const {
  std::set<Cell> gone(removed.begin(), removed.end());
  std::vector<Cell> kept;
  for (const auto& c : cells_)
    if (!gone.count(c)) kept.push_back(c);
  return Polyomino(std::move(kept));
}

Polyomino Polyomino::translated_to_origin() const {
  std::vector<Cell> moved;
  moved.reserve(cells_.size());
  for (const auto& c : cells_) moved.push_back({c.x - min_.x, c.y - min_.y});
  return Polyomino(std::move(moved));
}

std::pair<std::vector<GridPoint>, std::vector<Edge>> vertex_edge_sets(const Polyomino& p) {
  return {p.vertices(), p.edges()};
}

std::vector<Cell> interval_cells(const Interval& iv) {
  if (!iv.proper()) fail(Errc::degenerate_interval, "cell interval needs a proper interval");
  std::vector<Cell> out;
  for (int x = iv.lo.x; x < iv.hi.x; ++x)
    for (int y = iv.lo.y; y < iv.hi.y; ++y) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Interval> inner_intervals(const Polyomino& p) {
  std::vector<Interval> out;
  const auto& cells = p.cells();
  for (const auto& cl : cells)
    for (const auto& ch : cells) {
      if (!(cl.x <= ch.x && cl.y <= ch.y)) continue;
      bool inside = true;
      for (int x = cl.x; x <= ch.x && inside; ++x)
        for (int y = cl.y; y <= ch.y && inside; ++y)
          if (!p.contains({x, y})) inside = false;
      if (inside) out.push_back({cl.lower_left(), ch.upper_right()});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Block> maximal_blocks(const Polyomino& p, Orientation orient) {
  std::map<int, std::vector<int>> lines;  // fixed coordinate -> sorted moving coords
  for (const auto& c : p.cells()) {
    if (orient == Orientation::horizontal)
      lines[c.y].push_back(c.x);
    else
      lines[c.x].push_back(c.y);
  }
  std::vector<Block> out;
  for (auto& [fixed, run] : lines) {
    std::sort(run.begin(), run.end());
    std::size_t i = 0;
    while (i < run.size()) {
      std::size_t j = i;
      while (j + 1 < run.size() && run[j + 1] == run[j] + 1) ++j;
      int len = static_cast<int>(j - i + 1);
      if (len >= 2) {
        Block b;
        b.orient = orient;
        b.rank = len;
        if (orient == Orientation::horizontal) {
          b.first = {run[i], fixed};
          b.last = {run[j], fixed};
        } else {
          b.first = {fixed, run[i]};
          b.last = {fixed, run[j]};
        }
        out.push_back(b);
      }
      i = j + 1;
    }
  }
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.first < b.first; });
  return out;
}

std::vector<EdgeInterval> maximal_edge_intervals(const Polyomino& p, Orientation orient) {
  // line coordinate -> sorted starts of unit segments lying on it
  std::map<int, std::set<int>> lines;
  for (const auto& c : p.cells()) {
    if (orient == Orientation::horizontal) {
      lines[c.y].insert(c.x);
      lines[c.y + 1].insert(c.x);
    } else {
      lines[c.x].insert(c.y);
      lines[c.x + 1].insert(c.y);
    }
  }
  std::vector<EdgeInterval> out;
  for (auto& [line, starts] : lines) {
    std::vector<int> run(starts.begin(), starts.end());
    std::size_t i = 0;
    while (i < run.size()) {
      std::size_t j = i;
      while (j + 1 < run.size() && run[j + 1] == run[j] + 1) ++j;
      EdgeInterval e;
      e.orient = orient;
      if (orient == Orientation::horizontal) {
        e.lo = {run[i], line};
        e.hi = {run[j] + 1, line};
      } else {
        e.lo = {line, run[i]};
        e.hi = {line, run[j] + 1};
      }
      out.push_back(e);
      i = j + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GridPoint Transform::point(GridPoint p) const {
  int x = p.x, y = p.y;
  if (id >= 4) x = -x;
  switch (id % 4) {
    case 0: return {x, y};
    case 1: return {-y, x};
    case 2: return {-x, -y};
    default: return {y, -x};
  }
}

Cell Transform::cell(Cell c) const {
  GridPoint p = point(c.lower_left());
  GridPoint q = point(c.upper_right());
  return {std::min(p.x, q.x), std::min(p.y, q.y)};
}

Transform Transform::inverse() const {
  if (id < 4) return {(4 - id) % 4};
  return {id};  // reflections composed with rotation are involutions here
}

Polyomino transformed(const Polyomino& p, const Transform& t) {
  std::vector<Cell> moved;
  moved.reserve(p.cells().size());
  for (const auto& c : p.cells()) moved.push_back(t.cell(c));
  return Polyomino(std::move(moved)).translated_to_origin();
}

std::vector<Cell> canonical_form(const Polyomino& p) {
  std::vector<Cell> best;
  for (int id = 0; id < 8; ++id) {
    auto q = transformed(p, Transform{id});
    if (best.empty() || q.cells() < best) best = q.cells();
  }
  return best;
}

}  // namespace polyalg
