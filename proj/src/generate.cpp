#include "polyalg/generate.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "polyalg/classify.hpp"

namespace polyalg {

namespace {

int chebyshev(Cell a, Cell b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

// cells lexicographically below the fixed start cell (0,0) are forbidden
bool allowed(Cell c) { return c.x > 0 || (c.x == 0 && c.y >= 0); }

struct CycleSearch {
  int max_rank;
  std::vector<Cell> seq;
  std::set<Cell> used;
  std::set<std::vector<Cell>> canon_seen;
  std::vector<Polyomino> out;

  bool ring_valid() const {
    int n = static_cast<int>(seq.size());
    if (n <= 5) return false;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int gap = std::min(j - i, n - (j - i));
        int cheb = chebyshev(seq[i], seq[j]);
        if (gap == 1 && cheb != 1) return false;
        if (gap > 2 && cheb <= 1) return false;
      }
    return true;
  }

  void grow() {
    Cell cur = seq.back();
    int k = static_cast<int>(seq.size());  // index of the next cell
    if (k > 5 && cur.x == 1 && cur.y == 0) {
      if (ring_valid()) {
        Polyomino p(std::vector<Cell>(seq.begin(), seq.end()));
        auto canon = canonical_form(p);
        if (canon_seen.insert(canon).second) out.push_back(Polyomino(canon));
      }
      // a ring can also continue past (1,0); fall through and keep growing
    }
    if (k >= max_rank) return;
    for (Cell n : {Cell{cur.x + 1, cur.y}, Cell{cur.x - 1, cur.y}, Cell{cur.x, cur.y + 1},
                   Cell{cur.x, cur.y - 1}}) {
      if (!allowed(n) || used.count(n)) continue;
      // must still be able to come back to the closure cell (1,0)
      if (k + std::abs(n.x - 1) + std::abs(n.y) >= max_rank) continue;
      bool ok = true;
      // index 0 may be touched near closure; index 1 only by the closing cell
      // (1,0); indices >= 2 wrap at cyclic distance >= 3 and must stay clear
      for (int j = 2; ok && j <= k - 3; ++j)
        if (chebyshev(n, seq[j]) <= 1) ok = false;
      if (ok && k >= 4 && !(n.x == 1 && n.y == 0) && chebyshev(n, seq[1]) <= 1) ok = false;
      if (!ok) continue;
      seq.push_back(n);
      used.insert(n);
      grow();
      used.erase(n);
      seq.pop_back();
    }
  }
};

}  // namespace

std::vector<Polyomino> enumerate_closed_paths(int max_rank) {
  std::vector<Polyomino> out;
  if (max_rank <= 5) return out;
  CycleSearch search;
  search.max_rank = max_rank;
  // the lex-least cell of any ring through the origin has forced neighbors
  // (0,1) and (1,0); fixing the first step kills the direction symmetry
  search.seq = {Cell{0, 0}, Cell{0, 1}};
  search.used = {Cell{0, 0}, Cell{0, 1}};
  search.grow();
  std::sort(search.out.begin(), search.out.end(),
            [](const Polyomino& a, const Polyomino& b) {
              if (a.rank() != b.rank()) return a.rank() < b.rank();
              return a.cells() < b.cells();
            });
  return search.out;
}

std::vector<Polyomino> enumerate_polyominoes(int max_rank) {
  std::vector<Polyomino> out;
  if (max_rank < 1) return out;
  std::set<std::vector<Cell>> level{{Cell{0, 0}}};
  for (int r = 1; r <= max_rank; ++r) {
    std::set<std::vector<Cell>> next;
    for (const auto& cells : level) {
      out.push_back(Polyomino(cells));
      if (r == max_rank) continue;
      std::set<Cell> inside(cells.begin(), cells.end());
      for (const auto& c : cells)
        for (Cell n : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1},
                       Cell{c.x, c.y - 1}}) {
          if (inside.count(n)) continue;
          auto grown = cells;
          grown.push_back(n);
          next.insert(canonical_form(Polyomino(std::move(grown))));
        }
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Polyomino& a, const Polyomino& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.cells() < b.cells();
  });
  return out;
}

std::vector<Polyomino> generate(const GenerateOptions& opts) {
  if (opts.max_rank > opts.cap)
    fail(Errc::cap_exceeded, "max rank " + std::to_string(opts.max_rank) +
                                 " exceeds the configured cap " + std::to_string(opts.cap));
  std::vector<Polyomino> all =
      opts.closed_paths ? enumerate_closed_paths(opts.max_rank) : enumerate_polyominoes(opts.max_rank);
  if (opts.no_zigzag) {
    std::vector<Polyomino> kept;
    for (auto& p : all) {
      if (!opts.closed_paths && !closed_path_sequence(p)) {
        if (find_zig_zag_walks(p).empty()) kept.push_back(std::move(p));
        continue;
      }
      if (is_prime_closed_path(p)) kept.push_back(std::move(p));
    }
    all = std::move(kept);
  }
  if (opts.seed) {
    std::mt19937 rng(*opts.seed);
    std::shuffle(all.begin(), all.end(), rng);
  }
  if (opts.count && static_cast<int>(all.size()) > *opts.count) all.resize(*opts.count);
  return all;
}

}  // namespace polyalg
