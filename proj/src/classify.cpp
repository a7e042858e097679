#include "polyalg/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polyalg {

namespace {

int chebyshev(Cell a, Cell b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

std::vector<GridPoint> vertex_intersection(const std::vector<GridPoint>& a,
                                           const std::vector<GridPoint>& b) {
  std::vector<GridPoint> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Cell> edge_neighbors(const Polyomino& p, Cell c) {
  std::vector<Cell> out;
  for (Cell n : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}})
    if (p.contains(n)) out.push_back(n);
  return out;
}

std::optional<Polyomino> try_without(const Polyomino& p, const std::vector<Cell>& removed) {
  try {
    return p.without(removed);
  } catch (const Error&) {
    return std::nullopt;
  }
}

/// Both points lie on one edge interval of P: collinear and every unit
/// segment between them is an edge of a cell of P.
bool on_common_edge_interval(const Polyomino& p, GridPoint u, GridPoint v) {
  if (u.y == v.y) {
    for (int x = std::min(u.x, v.x); x < std::max(u.x, v.x); ++x)
      if (!p.contains_edge(Edge({x, u.y}, {x + 1, u.y}))) return false;
    return true;
  }
  if (u.x == v.x) {
    for (int y = std::min(u.y, v.y); y < std::max(u.y, v.y); ++y)
      if (!p.contains_edge(Edge({u.x, y}, {u.x, y + 1}))) return false;
    return true;
  }
  return false;
}

/// The two 2-point segments lie on one common edge interval of P.
bool segments_on_common_edge_interval(const Polyomino& p,
                                      const std::pair<GridPoint, GridPoint>& s1,
                                      const std::pair<GridPoint, GridPoint>& s2) {
  for (GridPoint u : {s1.first, s1.second})
    for (GridPoint v : {s2.first, s2.second})
      if (!on_common_edge_interval(p, u, v)) return false;
  return true;
}

}  // namespace

std::vector<std::vector<Cell>> find_holes(const Polyomino& p) {
  GridPoint lo = p.min_corner() - GridPoint{1, 1};
  GridPoint hi = p.max_corner();  // cells span lo.x .. hi.x inclusive after inflation
  int w = hi.x - lo.x + 1, h = hi.y - lo.y + 1;
  auto idx = [&](int x, int y) { return (y - lo.y) * w + (x - lo.x); };
  std::vector<char> blocked(static_cast<std::size_t>(w) * h, 0), seen(blocked.size(), 0);
  for (const auto& c : p.cells()) blocked[idx(c.x, c.y)] = 1;

  auto flood = [&](int sx, int sy, std::vector<Cell>* collect) {
    std::vector<Cell> stack{{sx, sy}};
    seen[idx(sx, sy)] = 1;
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      if (collect) collect->push_back(c);
      for (Cell n : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}}) {
        if (n.x < lo.x || n.x > hi.x || n.y < lo.y || n.y > hi.y) continue;
        if (blocked[idx(n.x, n.y)] || seen[idx(n.x, n.y)]) continue;
        seen[idx(n.x, n.y)] = 1;
        stack.push_back(n);
      }
    }
  };

  flood(lo.x, lo.y, nullptr);  // the unbounded component, reached via the frame
  std::vector<std::vector<Cell>> holes;
  for (int y = lo.y; y <= hi.y; ++y)
    for (int x = lo.x; x <= hi.x; ++x)
      if (!blocked[idx(x, y)] && !seen[idx(x, y)]) {
        std::vector<Cell> hole;
        flood(x, y, &hole);
        std::sort(hole.begin(), hole.end());
        holes.push_back(std::move(hole));
      }
  return holes;
}

bool is_thin(const Polyomino& p) {
  for (const auto& c : p.cells())
    if (p.contains({c.x + 1, c.y}) && p.contains({c.x, c.y + 1}) && p.contains({c.x + 1, c.y + 1}))
      return false;
  return true;
}

std::optional<ClosedPathSequence> closed_path_sequence(const Polyomino& p) {
  int n = p.rank();
  if (n <= 5) return std::nullopt;
  for (const auto& c : p.cells())
    if (edge_neighbors(p, c).size() != 2) return std::nullopt;

  Cell start = p.cells().front();  // lexicographically least
  auto nb = edge_neighbors(p, start);
  Cell next = std::min(nb[0], nb[1]);
  std::vector<Cell> seq{start, next};
  while (true) {
    auto ns = edge_neighbors(p, seq.back());
    Cell prev = seq[seq.size() - 2];
    Cell fwd = (ns[0] == prev) ? ns[1] : ns[0];
    if (fwd == start) break;
    seq.push_back(fwd);
    if (static_cast<int>(seq.size()) > n) return std::nullopt;
  }
  if (static_cast<int>(seq.size()) != n) return std::nullopt;  // more than one cycle

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int gap = std::min(j - i, n - (j - i));
      if (gap > 2 && chebyshev(seq[i], seq[j]) <= 1) return std::nullopt;
    }
  return ClosedPathSequence{std::move(seq)};
}

bool is_weakly_closed_path(const Polyomino& p) {
  int n = p.rank();
  if (n <= 6) return false;
  std::vector<Cell> ends;
  for (const auto& c : p.cells()) {
    auto d = edge_neighbors(p, c).size();
    if (d == 1) ends.push_back(c);
    else if (d != 2) return false;
  }
  if (ends.size() != 2) return false;

  std::vector<Cell> seq{ends[0]};
  seq.push_back(edge_neighbors(p, ends[0])[0]);
  while (static_cast<int>(seq.size()) < n) {
    auto ns = edge_neighbors(p, seq.back());
    Cell prev = seq[seq.size() - 2];
    if (ns.size() == 1) return false;
    seq.push_back(ns[0] == prev ? ns[1] : ns[0]);
  }
  // seq = A_1 .. A_n with A_0 = A_n the other endpoint
  if (chebyshev(seq.front(), seq.back()) > 1) return false;
  auto shared = vertex_intersection(vertex_set(std::span(&seq.front(), 1)),
                                    vertex_set(std::span(&seq.back(), 1)));
  if (shared.size() != 1) return false;
  if (chebyshev(seq[1], seq[n - 1]) <= 1) return false;      // V(A_2) cap V(A_0)
  if (chebyshev(seq[n - 2], seq[0]) <= 1) return false;      // V(A_{n-1}) cap V(A_1)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int gap = std::min(j - i, n - (j - i));
      if (gap > 2 && chebyshev(seq[i], seq[j]) <= 1) return false;
    }
  return true;
}

std::vector<LConfiguration> find_l_configurations(const Polyomino& p) {
  std::vector<LConfiguration> out;
  for (const auto& pivot : p.cells())
    for (int sx : {-1, 1})
      for (int sy : {-1, 1}) {
        Cell c2{pivot.x + sx, pivot.y}, c1{pivot.x + 2 * sx, pivot.y};
        Cell c4{pivot.x, pivot.y + sy}, c5{pivot.x, pivot.y + 2 * sy};
        if (p.contains(c1) && p.contains(c2) && p.contains(c4) && p.contains(c5))
          out.push_back(LConfiguration{{c1, c2, pivot, c4, c5}});
      }
  return out;  // one entry per (pivot, quadrant); reversal maps to the same entry
}

std::pair<int, std::optional<Ladder>> find_ladders(const Polyomino& p) {
  int best = 0;
  std::optional<Ladder> witness;
  for (Orientation orient : {Orientation::horizontal, Orientation::vertical}) {
    auto blocks = maximal_blocks(p, orient);
    int m = static_cast<int>(blocks.size());
    if (m < 2) continue;
    std::vector<std::vector<GridPoint>> vsets(m);
    for (int i = 0; i < m; ++i) vsets[i] = blocks[i].vertex_set();
    // shared[i][j] = the two common vertices when exactly two are shared
    std::map<std::pair<int, int>, std::pair<GridPoint, GridPoint>> qualif;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        auto common = vertex_intersection(vsets[i], vsets[j]);
        if (common.size() == 2) {
          qualif[{i, j}] = {common[0], common[1]};
          qualif[{j, i}] = {common[0], common[1]};
        }
      }

    std::vector<int> path;
    std::vector<char> used(m, 0);
    std::vector<std::pair<GridPoint, GridPoint>> segs;

    auto record = [&]() {
      int steps = static_cast<int>(path.size());
      if (steps >= 2 && steps > best) {
        best = steps;
        Ladder lad;
        lad.orient = orient;
        for (int id : path) lad.blocks.push_back(blocks[id]);
        lad.shared = segs;
        witness = lad;
      }
    };

    std::function<void(int)> dfs = [&](int cur) {
      record();
      for (int nxt = 0; nxt < m; ++nxt) {
        if (used[nxt]) continue;
        auto it = qualif.find({cur, nxt});
        if (it == qualif.end()) continue;
        if (!segs.empty() && segments_on_common_edge_interval(p, segs.back(), it->second))
          continue;  // consecutive steps must change edge line
        used[nxt] = 1;
        path.push_back(nxt);
        segs.push_back(it->second);
        dfs(nxt);
        segs.pop_back();
        path.pop_back();
        used[nxt] = 0;
      }
    };
    for (int i = 0; i < m; ++i) {
      used[i] = 1;
      path.push_back(i);
      dfs(i);
      path.pop_back();
      used[i] = 0;
    }
  }
  return {best, witness};
}

std::vector<WeakLadder> find_weak_ladders(const Polyomino& p) {
  std::vector<WeakLadder> out;
  for (Orientation orient : {Orientation::horizontal, Orientation::vertical}) {
    auto eis = maximal_edge_intervals(p, orient);
    for (const auto& block : maximal_blocks(p, orient)) {
      auto bcells = block.cells();
      auto bset = std::set<Cell>(bcells.begin(), bcells.end());
      auto bverts = block.vertex_set();
      for (const auto& c : p.cells()) {
        if (bset.count(c)) continue;
        auto sc = vertex_intersection(vertex_set(std::span(&c, 1)), bverts);
        if (sc.size() != 1) continue;
        GridPoint a1 = sc[0];
        const EdgeInterval* ei_a1 = nullptr;
        for (const auto& ei : eis)
          if (ei.contains(a1)) ei_a1 = &ei;
        for (const auto& d : p.cells()) {
          if (d == c || bset.count(d)) continue;
          auto sd = vertex_intersection(vertex_set(std::span(&d, 1)), bverts);
          if (sd.size() != 2) continue;
          bool same = ei_a1 && ei_a1->contains(sd[0]) && ei_a1->contains(sd[1]);
          if (!same) out.push_back(WeakLadder{block, c, d, a1, {sd[0], sd[1]}});
        }
      }
    }
  }
  return out;
}

namespace {

struct ZigZagSearch {
  const Polyomino& p;
  std::vector<Interval> intervals;
  std::set<std::pair<GridPoint, GridPoint>> pair_in_interval;  // both points in one inner interval
  std::vector<ZigZagWalk::Step> steps;
  std::vector<char> used;
  std::set<std::vector<int>> seen;
  std::vector<int> ids;
  std::vector<ZigZagWalk> found;
  int start = 0;
  std::size_t max_len;

  explicit ZigZagSearch(const Polyomino& poly, int cap) : p(poly) {
    intervals = inner_intervals(p);
    used.assign(intervals.size(), 0);
    max_len = cap > 0 ? static_cast<std::size_t>(cap) : intervals.size();
    for (const auto& iv : intervals)
      for (int x1 = iv.lo.x; x1 <= iv.hi.x; ++x1)
        for (int y1 = iv.lo.y; y1 <= iv.hi.y; ++y1)
          for (int x2 = iv.lo.x; x2 <= iv.hi.x; ++x2)
            for (int y2 = iv.lo.y; y2 <= iv.hi.y; ++y2) {
              GridPoint u{x1, y1}, v{x2, y2};
              if (u <= v) pair_in_interval.insert({u, v});
            }
  }

  bool z_pair_free(GridPoint zi, GridPoint zj) const {
    auto key = zi <= zj ? std::pair{zi, zj} : std::pair{zj, zi};
    return !pair_in_interval.count(key);
  }

  static bool meets_only_at(const Interval& a, const Interval& b, GridPoint w) {
    GridPoint lo{std::max(a.lo.x, b.lo.x), std::max(a.lo.y, b.lo.y)};
    GridPoint hi{std::min(a.hi.x, b.hi.x), std::min(a.hi.y, b.hi.y)};
    return lo == w && hi == w;
  }

  void emit() {
    std::vector<int> key;
    for (int id : ids) key.push_back(id);
    std::vector<int> canon = key;
    auto consider = [&](std::vector<int> v) {
      for (std::size_t r = 0; r < v.size(); ++r) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        if (v < canon) canon = v;
      }
    };
    consider(key);
    std::reverse(key.begin(), key.end());
    consider(key);
    if (seen.insert(canon).second) found.push_back(ZigZagWalk{steps});
  }

  // v is the entry corner of interval `id`; choose the exit among the other pair.
  void visit(int id, GridPoint v) {
    const Interval& iv = intervals[id];
    bool v_diag = (v == iv.lo || v == iv.hi);
    GridPoint z = v_diag ? (v == iv.lo ? iv.hi : iv.lo)
                         : (v == iv.anti_lo() ? iv.anti_hi() : iv.anti_lo());
    for (const auto& zi : steps)
      if (!z_pair_free(zi.z, z)) return;
    std::array<GridPoint, 2> exits =
        v_diag ? std::array{iv.anti_lo(), iv.anti_hi()} : std::array{iv.lo, iv.hi};
    for (GridPoint vn : exits) {
      GridPoint u = (vn == exits[0]) ? exits[1] : exits[0];
      if (!on_common_edge_interval(p, v, vn)) continue;  // condition (2)
      steps.push_back({iv, v, z, u, vn});
      ids.push_back(id);
      // close the walk
      if (steps.size() >= 2 && vn == steps.front().v &&
          meets_only_at(iv, steps.front().ival, vn))
        emit();
      // extend
      if (steps.size() < max_len) {
        for (std::size_t j = start + 1; j < intervals.size(); ++j) {
          if (used[j]) continue;
          const Interval& nxt = intervals[j];
          bool corner = (vn == nxt.lo || vn == nxt.hi || vn == nxt.anti_lo() || vn == nxt.anti_hi());
          if (!corner || !meets_only_at(iv, nxt, vn)) continue;
          used[j] = 1;
          visit(static_cast<int>(j), vn);
          used[j] = 0;
        }
      }
      ids.pop_back();
      steps.pop_back();
    }
  }

  void run() {
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      start = static_cast<int>(i);
      used[i] = 1;
      for (GridPoint v : intervals[i].corner_points()) visit(static_cast<int>(i), v);
      used[i] = 0;
    }
  }
};

}  // namespace

std::vector<ZigZagWalk> find_zig_zag_walks(const Polyomino& p, int max_len) {
  ZigZagSearch search(p, max_len);
  search.run();
  return std::move(search.found);
}

bool is_prime_closed_path(const Polyomino& p) {
  if (!closed_path_sequence(p))
    fail(Errc::not_a_closed_path, "input is not a closed path");
  bool via_config = !find_l_configurations(p).empty() || find_ladders(p).first >= 3;
  bool via_zigzag = find_zig_zag_walks(p).empty();
  if (via_config != via_zigzag)
    throw std::logic_error("closed-path primality routes disagree");
  return via_config;
}

ClassificationReport classify_basic(const Polyomino& p) {
  ClassificationReport rep;
  rep.holes = find_holes(p);
  rep.is_simple = rep.holes.empty();
  rep.is_thin = is_thin(p);
  rep.is_closed_path = closed_path_sequence(p).has_value();
  rep.is_weakly_closed_path = is_weakly_closed_path(p);
  rep.l_configurations = static_cast<int>(find_l_configurations(p).size());
  rep.max_ladder_steps = find_ladders(p).first;
  rep.has_weak_ladder = !find_weak_ladders(p).empty();
  rep.has_zig_zag = !find_zig_zag_walks(p).empty();
  if (rep.is_closed_path)
    rep.is_prime_closed_path = (rep.l_configurations > 0 || rep.max_ladder_steps >= 3);
  return rep;
}

namespace {

std::optional<LCDecomposition> lc_in_frame(const Polyomino& q) {
  for (const auto& A : q.cells()) {
    int rmax = 0, smax = 0;
    while (q.contains({A.x + rmax + 1, A.y})) ++rmax;
    while (q.contains({A.x, A.y + smax + 1})) ++smax;
    for (int r = 2; r <= rmax; ++r)
      for (int s = 2; s <= smax; ++s) {
        std::vector<Cell> lcells;
        for (int k = 0; k <= r; ++k) lcells.push_back({A.x + k, A.y});
        for (int m = 1; m <= s; ++m) lcells.push_back({A.x, A.y + m});
        auto comp = try_without(q, lcells);
        if (!comp) continue;
        auto contact = vertex_intersection(vertex_set(lcells), comp->vertices());
        if (contact.size() != 4) continue;

        std::vector<GridPoint> a_i, d_i, b_j, c_j;
        for (int i = 1; i <= s; ++i) {
          a_i.push_back({A.x + 1, A.y + i + 1});
          d_i.push_back({A.x, A.y + i + 1});
        }
        for (int j = 1; j <= r; ++j) {
          b_j.push_back({A.x + j + 1, A.y + 1});
          c_j.push_back({A.x + j + 1, A.y});
        }
        auto sorted4 = [](GridPoint p1, GridPoint p2, GridPoint p3, GridPoint p4) {
          std::vector<GridPoint> v{p1, p2, p3, p4};
          std::sort(v.begin(), v.end());
          return v;
        };
        int case_id = 0;
        if (contact == sorted4(a_i[s - 2], a_i[s - 1], b_j[r - 2], b_j[r - 1])) case_id = 1;
        else if (contact == sorted4(a_i[s - 2], a_i[s - 1], c_j[r - 2], c_j[r - 1])) case_id = 2;
        else if (contact == sorted4(d_i[s - 2], d_i[s - 1], b_j[r - 2], b_j[r - 1])) case_id = 3;
        else if (contact == sorted4(d_i[s - 2], d_i[s - 1], c_j[r - 2], c_j[r - 1])) case_id = 4;
        if (case_id == 0) continue;

        std::vector<Cell> harm, varm, harm_tail, varm_tail;
        for (int k = 0; k <= r; ++k) harm.push_back({A.x + k, A.y});
        for (int m = 0; m <= s; ++m) varm.push_back({A.x, A.y + m});
        harm_tail.assign(harm.begin() + 1, harm.end());
        varm_tail.assign(varm.begin() + 1, varm.end());
        auto p1 = try_without(q, harm);
        auto p2 = try_without(q, varm);
        auto p4 = try_without(q, {Cell{A.x, A.y}, Cell{A.x + 1, A.y}, Cell{A.x, A.y + 1}});
        auto p1p = try_without(q, harm_tail);
        auto p2p = try_without(q, varm_tail);
        if (!p1 || !p2 || !p4 || !p1p || !p2p) continue;

        LCDecomposition dec;
        dec.oriented = q;
        dec.corner = A;
        dec.r = r;
        dec.s = s;
        dec.case_id = case_id;
        dec.contact = contact;
        dec.a = A.lower_left();
        dec.b = A.upper_right();
        dec.c = A.upper_left();
        dec.d = A.lower_right();
        dec.a_i = a_i;
        dec.d_i = d_i;
        dec.b_j = b_j;
        dec.c_j = c_j;
        dec.p1 = *p1;
        dec.p2 = *p2;
        dec.p3 = *comp;
        dec.p4 = *p4;
        dec.p1p = *p1p;
        dec.p2p = *p2p;
        return dec;
      }
  }
  return std::nullopt;
}

std::optional<WConfiguration> w_in_frame(const Polyomino& q) {
  for (const auto& A : q.cells()) {
    if (!q.contains({A.x, A.y - 1}) || !q.contains({A.x + 1, A.y})) continue;
    if (q.contains({A.x + 1, A.y - 1})) continue;  // blocks must meet in one vertex only
    int s = 1;
    while (q.contains({A.x - s, A.y - 1})) ++s;
    int r = 1;
    while (q.contains({A.x + 1, A.y + r})) ++r;
    if (s < 2 || r < 2) continue;

    std::vector<Cell> hblock, vblock;
    for (int i = 1; i <= s; ++i) hblock.push_back({A.x - i + 1, A.y - 1});
    for (int j = 1; j <= r; ++j) vblock.push_back({A.x + 1, A.y + j - 1});
    auto hverts = vertex_set(hblock), vverts = vertex_set(vblock);
    auto meet = vertex_intersection(hverts, vverts);
    if (meet.size() != 1 || meet[0] != A.lower_right()) continue;

    std::vector<Cell> wcells = hblock;
    wcells.insert(wcells.end(), vblock.begin(), vblock.end());
    wcells.push_back(A);
    auto m = try_without(q, wcells);
    if (!m) continue;
    auto contact = vertex_intersection(vertex_set(wcells), m->vertices());
    if (contact.size() != 4) continue;

    std::vector<GridPoint> b_i, c_i, a_j, d_j;
    for (int i = 1; i <= s; ++i) {
      b_i.push_back({A.x - i + 1, A.y});
      c_i.push_back({A.x - i + 1, A.y - 1});
    }
    for (int j = 1; j <= r; ++j) {
      a_j.push_back({A.x + 1, A.y + j});
      d_j.push_back({A.x + 2, A.y + j});
    }
    auto sorted4 = [](GridPoint p1, GridPoint p2, GridPoint p3, GridPoint p4) {
      std::vector<GridPoint> v{p1, p2, p3, p4};
      std::sort(v.begin(), v.end());
      return v;
    };
    int case_id = 0;
    if (contact == sorted4(c_i[s - 2], c_i[s - 1], d_j[r - 2], d_j[r - 1])) case_id = 1;
    else if (contact == sorted4(b_i[s - 2], b_i[s - 1], d_j[r - 2], d_j[r - 1])) case_id = 2;
    if (case_id == 0) continue;

    Cell A1{A.x, A.y - 1}, B1{A.x + 1, A.y};
    auto rm = [&](std::vector<Cell> cells) { return try_without(q, cells); };
    std::vector<Cell> r2c{A}, f1c{A}, f2c{A, A1};
    r2c.insert(r2c.end(), vblock.begin(), vblock.end());
    f1c.insert(f1c.end(), hblock.begin(), hblock.end());
    f2c.insert(f2c.end(), vblock.begin(), vblock.end());
    auto dq = rm({A});
    auto dq1 = rm({A, A1, B1});
    auto dr1 = rm({A, B1});
    auto dr2 = rm(r2c);
    auto df1 = rm(f1c);
    auto df2 = rm(f2c);
    if (!dq || !dq1 || !dr1 || !dr2 || !df1 || !df2) continue;

    WConfiguration w;
    w.oriented = q;
    w.corner_cell = A;
    w.s = s;
    w.r = r;
    w.case_id = case_id;
    w.a = A.upper_left();
    w.b = A.lower_right();
    w.c = A1.lower_right();
    w.d = B1.lower_right();
    w.b_i = b_i;
    w.c_i = c_i;
    w.a_j = a_j;
    w.d_j = d_j;
    w.q = *dq;
    w.q1 = *dq1;
    w.r1 = *dr1;
    w.r2 = *dr2;
    w.f1 = *df1;
    w.f2 = *df2;
    return w;
  }
  return std::nullopt;
}

std::optional<Ladder3Decomposition> ladder3_in_frame(const Polyomino& q) {
  auto hblocks = maximal_blocks(q, Orientation::horizontal);
  for (const auto& B : q.cells()) {
    Cell A{B.x, B.y + 1};
    if (!q.contains(A)) continue;
    if (q.contains({B.x + 1, B.y}) || q.contains({A.x - 1, A.y})) continue;  // ends of the blocks
    int r = 0;
    while (q.contains({B.x - r - 1, B.y})) ++r;
    int s = 0;
    while (q.contains({A.x + s + 1, A.y})) ++s;
    if (r < 2 || s < 2) continue;  // both blocks need at least three cells

    std::vector<Cell> bl, bu;
    for (int i = 1; i <= r; ++i) bl.push_back({B.x - r + i - 1, B.y});
    bl.push_back(B);
    bu.push_back(A);
    for (int i = 1; i <= s; ++i) bu.push_back({A.x + i, A.y});

    // ladder-end condition: nothing outside the lower block touches c_1 or c_2
    GridPoint c1{B.x - r, B.y}, c2{B.x - r + 1, B.y};
    bool clean = true;
    std::set<Cell> blset(bl.begin(), bl.end());
    for (const auto& cell : q.cells()) {
      if (blset.count(cell)) continue;
      for (GridPoint v : cell.corners())
        if (v == c1 || v == c2) clean = false;
    }
    if (!clean) continue;

    // a third step above the upper block must complete a 3-step ladder
    std::pair<GridPoint, GridPoint> seg_bl_bu{A.lower_left(), A.lower_right()};
    auto buverts = vertex_set(bu);
    bool third = false;
    for (const auto& k : hblocks) {
      if (k.first == bl.front() || k.first == bu.front()) continue;
      auto common = vertex_intersection(k.vertex_set(), buverts);
      if (common.size() != 2) continue;
      if (!segments_on_common_edge_interval(q, seg_bl_bu, {common[0], common[1]})) third = true;
    }
    if (!third) continue;

    Cell A1{A.x + 1, A.y}, Br{B.x - 1, B.y};
    std::vector<Cell> k2c = bu;
    k2c.push_back(B);
    k2c.push_back(Br);
    std::vector<Cell> k3c = bl;
    k3c.push_back(A);
    auto k1 = try_without(q, bl);
    auto k2 = try_without(q, k2c);
    auto k3 = try_without(q, k3c);
    auto k4 = try_without(q, {A, B, A1, Br});
    if (!k1 || !k2 || !k3 || !k4) continue;

    Ladder3Decomposition dec;
    dec.oriented = q;
    dec.cell_a = A;
    dec.cell_b = B;
    dec.r = r;
    dec.s = s;
    dec.a = A.upper_left();
    dec.c = A.lower_left();
    dec.b = A.upper_right();
    dec.d = A.lower_right();
    dec.f = B.lower_left();
    dec.g = B.lower_right();
    for (int i = 1; i <= s; ++i) {
      dec.a_i.push_back({A.x + i + 1, A.y + 1});
      dec.b_i.push_back({A.x + i + 1, A.y});
    }
    for (int i = 1; i <= r; ++i) {
      dec.c_i.push_back({B.x - r + i - 1, B.y});
      dec.d_i.push_back({B.x - r + i - 1, B.y + 1});
    }
    dec.k1 = *k1;
    dec.k2 = *k2;
    dec.k3 = *k3;
    dec.k4 = *k4;
    return dec;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LCDecomposition> decompose_lc(const Polyomino& p) {
  for (int id = 0; id < 8; ++id) {
    auto dec = lc_in_frame(transformed(p, Transform{id}));
    if (dec) {
      dec->transform_id = id;
      return dec;
    }
  }
  return std::nullopt;
}

std::optional<WConfiguration> decompose_w(const Polyomino& p) {
  if (!closed_path_sequence(p) || !find_l_configurations(p).empty()) return std::nullopt;
  for (int id = 0; id < 8; ++id) {
    auto w = w_in_frame(transformed(p, Transform{id}));
    if (w) {
      w->transform_id = id;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Ladder3Decomposition> decompose_ladder3(const Polyomino& p) {
  if (!closed_path_sequence(p) || !find_l_configurations(p).empty()) return std::nullopt;
  for (int id = 0; id < 8; ++id) {
    auto dec = ladder3_in_frame(transformed(p, Transform{id}));
    if (dec) {
      dec->transform_id = id;
      return dec;
    }
  }
  return std::nullopt;
}

OrientationResult normalize_orientation(const Polyomino& p, Feature feature) {
  for (int id = 0; id < 8; ++id) {
    Polyomino q = transformed(p, Transform{id});
    bool hit = false;
    switch (feature) {
      case Feature::lc: hit = lc_in_frame(q).has_value(); break;
      case Feature::w: hit = w_in_frame(q).has_value(); break;
      case Feature::ladder3: hit = ladder3_in_frame(q).has_value(); break;
    }
    if (hit) return {std::move(q), id, true};
  }
  return {p, 0, false};
}

}  // namespace polyalg
