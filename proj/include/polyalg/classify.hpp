#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyalg/geometry.hpp"

namespace polyalg {

struct ClassificationReport {
  bool is_simple = false;
  std::vector<std::vector<Cell>> holes;
  bool is_thin = false;
  bool is_closed_path = false;
  bool is_weakly_closed_path = false;
  int l_configurations = 0;
  int max_ladder_steps = 0;
  bool has_weak_ladder = false;
  bool has_zig_zag = false;
  std::optional<bool> is_prime_closed_path;
};

/// Cyclic cell sequence witnessing the closed-path property.
struct ClosedPathSequence {
  std::vector<Cell> cells;  // A_1 .. A_n, n > 5
};

/// Five cells forming two orthogonal straight runs of three sharing the pivot cells[2].
struct LConfiguration {
  std::array<Cell, 5> cells;
};

struct Ladder {
  Orientation orient = Orientation::horizontal;
  std::vector<Block> blocks;
  std::vector<std::pair<GridPoint, GridPoint>> shared;  // {a_i, b_i} per consecutive pair
};

struct WeakLadder {
  Block block;
  Cell c, d;
  GridPoint a1;
  std::pair<GridPoint, GridPoint> a2b2;
};

struct ZigZagWalk {
  struct Step {
    Interval ival;
    GridPoint v, z, u, v_next;
  };
  std::vector<Step> steps;
};

/// Corner labeling and derived polyominoes of an (L,C) decomposition.
/// The record lives in the oriented frame (horizontal arm right, vertical arm up);
/// transform_id maps the original polyomino onto that frame.
struct LCDecomposition {
  int transform_id = 0;
  Polyomino oriented;
  Cell corner;                      // A
  int r = 0, s = 0;                 // arms hold r+1 and s+1 cells including A
  int case_id = 0;                  // 1..4, the V(L) cap V(C) pattern
  std::vector<GridPoint> contact;   // the four shared vertices
  GridPoint a, b, c, d;             // corners of A
  std::vector<GridPoint> a_i, d_i;  // upper right/left corners of B_1..B_s
  std::vector<GridPoint> b_j, c_j;  // upper/lower right corners of A_1..A_r
  Polyomino p1, p2, p3, p4, p1p, p2p;
};

/// W collection (staircase junction) with its derived polyominoes, oriented frame.
struct WConfiguration {
  int transform_id = 0;
  Polyomino oriented;
  Cell corner_cell;                 // A
  int s = 0, r = 0;                 // horizontal block [A_s..A_1], vertical block [B_1..B_r]
  int case_id = 0;                  // 1 or 2
  GridPoint a, b, c, d;
  std::vector<GridPoint> b_i, c_i;  // left upper/lower corners of A_1..A_s
  std::vector<GridPoint> a_j, d_j;  // left/right upper corners of B_1..B_r
  Polyomino q, q1, r1, r2, f1, f2;
};

/// Ladder junction where both blocks have at least three cells, oriented frame.
struct Ladder3Decomposition {
  int transform_id = 0;
  Polyomino oriented;
  Cell cell_a, cell_b;              // A left end of upper block, B right end of lower block
  int r = 0, s = 0;                 // lower block r+1 cells, upper block s+1 cells
  GridPoint a, b, c, d, f, g;
  std::vector<GridPoint> a_i, b_i;  // upper/lower right corners of A_1..A_s
  std::vector<GridPoint> c_i, d_i;  // lower/upper left corners of B_1..B_r
  Polyomino k1, k2, k3, k4;
};

ClassificationReport classify_basic(const Polyomino& p);

std::vector<std::vector<Cell>> find_holes(const Polyomino& p);
bool is_thin(const Polyomino& p);

std::optional<ClosedPathSequence> closed_path_sequence(const Polyomino& p);
bool is_weakly_closed_path(const Polyomino& p);

std::vector<LConfiguration> find_l_configurations(const Polyomino& p);

std::pair<int, std::optional<Ladder>> find_ladders(const Polyomino& p);

std::vector<WeakLadder> find_weak_ladders(const Polyomino& p);

/// All zig-zag walks up to cyclic rotation and reversal; max_len bounds the
/// chain length (0 means the number of inner intervals).
std::vector<ZigZagWalk> find_zig_zag_walks(const Polyomino& p, int max_len = 0);

/// L-configuration or ladder of >= 3 steps; asserted equal to the absence of
/// zig-zag walks.
bool is_prime_closed_path(const Polyomino& p);

std::optional<LCDecomposition> decompose_lc(const Polyomino& p);
std::optional<WConfiguration> decompose_w(const Polyomino& p);
std::optional<Ladder3Decomposition> decompose_ladder3(const Polyomino& p);

enum class Feature { lc, w, ladder3 };

struct OrientationResult {
  Polyomino oriented;
  int transform_id = 0;
  bool matched = false;
};

/// Dihedral transform putting the named feature in the reference orientation
/// (horizontal arm right, vertical arm up).
OrientationResult normalize_orientation(const Polyomino& p, Feature feature);

}  // namespace polyalg
