#pragma once

#include <optional>
#include <utility>

#include "polyalg/geometry.hpp"
#include "polyalg/polynomial.hpp"

namespace polyalg {

struct RookConfiguration {
  std::vector<Cell> cells;  // pairwise non-attacking
};

/// Two rooks attack iff the cell interval joining them lies wholly in P:
/// rooks do not see through holes or notches.
bool attacks(const Polyomino& p, Cell c1, Cell c2);

/// Sum over k of |R(P,k)| t^k with r_0 = 1; degree is the rook number.
IntPolynomial rook_polynomial(const Polyomino& p);

int rook_number(const Polyomino& p);

struct SPropertyResult {
  bool holds = false;
  std::optional<std::vector<Cell>> witness;  // offending maximal interval
};

/// General form for thin polyominoes: every maximal interval has exactly one
/// single cell. Closed paths use the rank-3 shortcut and both forms are
/// required to agree on thin closed paths.
SPropertyResult s_property(const Polyomino& p);

/// Shortcut form: every maximal block has rank exactly 3 (closed paths only).
bool s_property_closed_path(const Polyomino& p);

}  // namespace polyalg
