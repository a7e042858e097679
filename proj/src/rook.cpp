#include "polyalg/rook.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "polyalg/classify.hpp"

namespace polyalg {

namespace {

/// Per-cell ids of the maximal contiguous row run and column run (rank-1 runs
/// included). Two cells attack iff they share a run id.
struct RunIndex {
  std::vector<int> row_run, col_run;  // by cell index in p.cells()
  int run_count = 0;

  explicit RunIndex(const Polyomino& p) {
    const auto& cells = p.cells();
    auto index_of = [&](Cell c) {
      return static_cast<int>(std::lower_bound(cells.begin(), cells.end(), c) - cells.begin());
    };
    row_run.assign(cells.size(), -1);
    col_run.assign(cells.size(), -1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (row_run[i] < 0) {
        Cell c = cells[i];
        while (p.contains({c.x - 1, c.y})) c.x--;
        int id = run_count++;
        for (; p.contains(c); ++c.x) row_run[index_of(c)] = id;
      }
      if (col_run[i] < 0) {
        Cell c = cells[i];
        while (p.contains({c.x, c.y - 1})) c.y--;
        int id = run_count++;
        for (; p.contains(c); ++c.y) col_run[index_of(c)] = id;
      }
    }
  }
};

}  // namespace

bool attacks(const Polyomino& p, Cell c1, Cell c2) {
  if (!p.contains(c1) || !p.contains(c2))
    fail(Errc::cell_not_in_polyomino, "rook cell outside the polyomino");
  if (c1 == c2)
    fail(Errc::cell_not_in_polyomino, "attack test needs two distinct cells");
  if (c1.y == c2.y) {
    for (int x = std::min(c1.x, c2.x); x <= std::max(c1.x, c2.x); ++x)
      if (!p.contains({x, c1.y})) return false;
    return true;
  }
  if (c1.x == c2.x) {
    for (int y = std::min(c1.y, c2.y); y <= std::max(c1.y, c2.y); ++y)
      if (!p.contains({c1.x, y})) return false;
    return true;
  }
  return false;
}

IntPolynomial rook_polynomial(const Polyomino& p) {
  RunIndex runs(p);
  int n = p.rank();
  std::vector<std::int64_t> counts(n + 1, 0);
  std::vector<char> occupied(runs.run_count, 0);

  // backtracking over cells in canonical order, pruned by run occupancy
  auto rec = [&](auto&& self, int i, int placed) -> void {
    counts[placed] = checked_add(counts[placed], 1);
    for (int j = i; j < n; ++j) {
      int rr = runs.row_run[j], cr = runs.col_run[j];
      if (occupied[rr] || occupied[cr]) continue;
      occupied[rr] = occupied[cr] = 1;
      self(self, j + 1, placed + 1);
      occupied[rr] = occupied[cr] = 0;
    }
  };
  rec(rec, 0, 0);
  return IntPolynomial(std::move(counts));
}

int rook_number(const Polyomino& p) { return rook_polynomial(p).degree(); }

namespace {

/// Maximal inner intervals of a thin polyomino: the row/column runs not
/// strictly contained in an orthogonal one.
std::vector<std::vector<Cell>> maximal_intervals_thin(const Polyomino& p) {
  RunIndex runs(p);
  std::vector<std::vector<Cell>> by_run(runs.run_count);
  const auto& cells = p.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    by_run[runs.row_run[i]].push_back(cells[i]);
    by_run[runs.col_run[i]].push_back(cells[i]);
  }
  for (auto& run : by_run) std::sort(run.begin(), run.end());
  std::vector<std::vector<Cell>> out;
  for (int id = 0; id < runs.run_count; ++id) {
    const auto& run = by_run[id];
    if (run.empty()) continue;
    bool contained = false;
    for (int other = 0; other < runs.run_count && !contained; ++other) {
      if (other == id || by_run[other].size() <= run.size()) continue;
      contained = std::includes(by_run[other].begin(), by_run[other].end(), run.begin(), run.end());
    }
    if (!contained && std::find(out.begin(), out.end(), run) == out.end()) out.push_back(run);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SPropertyResult s_property(const Polyomino& p) {
  if (!is_thin(p)) fail(Errc::not_thin, "the S-property is defined for thin polyominoes");
  auto maximal = maximal_intervals_thin(p);
  // a cell is single when a unique maximal interval contains it
  std::map<Cell, int> containing;
  for (const auto& iv : maximal)
    for (const auto& c : iv) containing[c]++;
  for (const auto& iv : maximal) {
    int singles = 0;
    for (const auto& c : iv)
      if (containing[c] == 1) ++singles;
    if (singles != 1) return {false, iv};
  }
  return {true, std::nullopt};
}

bool s_property_closed_path(const Polyomino& p) {
  if (!closed_path_sequence(p)) fail(Errc::not_a_closed_path, "shortcut form needs a closed path");
  bool shortcut = true;
  for (Orientation o : {Orientation::horizontal, Orientation::vertical})
    for (const auto& b : maximal_blocks(p, o))
      if (b.rank != 3) shortcut = false;
  // the general thin form must agree on thin closed paths
  if (is_thin(p) && s_property(p).holds != shortcut)
    throw std::logic_error("S-property forms disagree on a thin closed path");
  return shortcut;
}

}  // namespace polyalg
