#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "polyalg/geometry.hpp"

namespace polyalg {

using VarId = int;

/// Squarefree-friendly sparse monomial over vertex variables.
struct VertexMonomial {
  std::vector<std::pair<VarId, int>> e;  // sorted by variable id, exponents > 0

  int degree() const;
  bool is_one() const { return e.empty(); }
  static VertexMonomial var(VarId v) { return {{{v, 1}}}; }
  friend bool operator==(const VertexMonomial&, const VertexMonomial&) = default;

  friend VertexMonomial mul(const VertexMonomial& a, const VertexMonomial& b);
  friend bool divides(const VertexMonomial& a, const VertexMonomial& b);  // a | b
  friend VertexMonomial quotient(const VertexMonomial& b, const VertexMonomial& a);  // b / a
  friend VertexMonomial lcm(const VertexMonomial& a, const VertexMonomial& b);
  friend bool coprime(const VertexMonomial& a, const VertexMonomial& b);
};

/// Pure difference binomial plus - minus (signs never matter downstream).
struct VertexBinomial {
  VertexMonomial plus, minus;
  friend bool operator==(const VertexBinomial&, const VertexBinomial&) = default;
};

/// Maps V(P) onto variable ids 0..n-1 in the base total order (x, then y).
class VertexIndex {
public:
  explicit VertexIndex(const Polyomino& p) : verts_(p.vertices()) {}
  int size() const { return static_cast<int>(verts_.size()); }
  VarId id_of(GridPoint v) const;
  GridPoint point_of(VarId id) const { return verts_[id]; }

private:
  std::vector<GridPoint> verts_;  // sorted = base order
};

/// Lexicographic order induced by: variables in Y beat variables outside Y,
/// ties broken by the base order on vertices.
struct LexOrderConfig {
  std::vector<char> in_y;   // by variable id
  std::vector<int> rank;    // rank[id]; larger rank = larger variable

  static LexOrderConfig make(int nvars, const std::vector<VarId>& y_members);
  std::strong_ordering compare(const VertexMonomial& a, const VertexMonomial& b) const;
};

/// One inner 2-minor per inner interval: diagonal product minus anti-diagonal
/// product, in inner_intervals order.
std::vector<VertexBinomial> inner_two_minors(const Polyomino& p, const VertexIndex& vars);

/// Normal form of a binomial; empty optional when it reduces to zero.
std::optional<VertexBinomial> reduce_binomial(VertexBinomial h,
                                              const std::vector<VertexBinomial>& basis,
                                              const LexOrderConfig& order);

struct BuchbergerResult {
  std::vector<VertexBinomial> basis;  // reduced basis
  bool is_groebner_already = false;   // every initial S-pair reduced to zero
  long spairs_processed = 0;
};

/// Binomial Buchberger completion; the engine never leaves the binomial world.
/// `budget` caps processed S-pairs (BudgetExceeded beyond it).
BuchbergerResult buchberger(const std::vector<VertexBinomial>& gens, const LexOrderConfig& order,
                            long budget = 1000000);

/// True iff every S-pair of `gens` reduces to zero against `gens`.
bool spairs_reduce_to_zero(const std::vector<VertexBinomial>& gens, const LexOrderConfig& order);

struct AnchorConstraints {
  std::vector<VarId> must_in;   // forced into Y
  std::vector<VarId> must_out;  // forced out of Y
};

/// Searches subsets Y respecting the anchors until the inner 2-minors pass the
/// S-pair test: constraint-seeded, then conflict-driven flips over free
/// vertices, bounded by `candidate_budget` tested subsets.
std::optional<LexOrderConfig> find_groebner_lex_order(const Polyomino& p, const VertexIndex& vars,
                                                      const AnchorConstraints& anchors = {},
                                                      int candidate_budget = 4096);

}  // namespace polyalg
