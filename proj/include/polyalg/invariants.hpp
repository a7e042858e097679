#pragma once

#include <optional>
#include <string>

#include "polyalg/classify.hpp"
#include "polyalg/hilbert_oracle.hpp"
#include "polyalg/polynomial.hpp"
#include "polyalg/rook.hpp"

namespace polyalg {

struct InvariantsReport {
  IntPolynomial h_rook;
  std::optional<IntPolynomial> h_formula;
  std::string formula;  // "lc", "1config", "2config", "ladder3", or empty
  std::optional<IntPolynomial> h_oracle;
  HilbertSeries hp;
  int krull_dim = 0;
  int regularity = 0;
  bool gorenstein = false;
  bool methods_agree = false;
};

/// h-polynomial of a simple thin polyomino: its rook polynomial.
IntPolynomial h_simple_thin(const Polyomino& p);

/// The general rational-series combination for an (L,C)-polyomino with prime ideal.
HilbertSeries hp_lc_general(const LCDecomposition& dec, const HilbertSeries& hp1,
                            const HilbertSeries& hp2, const HilbertSeries& hp3,
                            const HilbertSeries& hp4);

/// Specialization when the complement C is simple: a polynomial identity on
/// h-polynomials over (1-t)^(|V(P)| - rank P).
IntPolynomial h_lc_simple(const Polyomino& p, const LCDecomposition& dec);

IntPolynomial h_1config(const Polyomino& p, const WConfiguration& w);
IntPolynomial h_2config(const Polyomino& p, const WConfiguration& w);
IntPolynomial h_ladder3(const Polyomino& p, const Ladder3Decomposition& dec);

/// Oracle check of HP(P) = HP(Q) + t/(1-t) HP(Q1).
bool hp_q_relation_check(const Polyomino& p, const WConfiguration& w);

/// Invariants of the weakly closed path Q = P minus the W corner cell.
InvariantsReport weakly_closed_invariants(const Polyomino& q, const Polyomino& p,
                                          const WConfiguration& w);

struct ClosedPathOptions {
  bool run_oracle = true;
  bool run_formula = true;
  OracleOptions oracle;
};

/// Full pipeline for a closed path without zig-zag walks: rook route, the
/// dispatched decomposition formula, oracle, agreement, dimension/regularity,
/// Gorenstein.
InvariantsReport closed_path_invariants(const Polyomino& p, const ClosedPathOptions& opts = {});

/// S-property route; asserts agreement with palindromicity of the h-polynomial.
bool gorenstein(const Polyomino& p);

}  // namespace polyalg
