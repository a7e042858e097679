#pragma once

#include "polyalg/groebner.hpp"
#include "polyalg/polynomial.hpp"

namespace polyalg {

/// Hilbert series of a polynomial ring modulo a monomial ideal, canonicalized.
/// Inclusion-exclusion over the lcm lattice up to `ie_cutoff` generators,
/// pivot-variable splitting beyond.
HilbertSeries monomial_hilbert_series(std::vector<VertexMonomial> gens, int nvars,
                                      int ie_cutoff = 20);

/// Numerator over (1-t)^nvars before canonicalization (exposed for tests).
IntPolynomial monomial_hilbert_numerator(std::vector<VertexMonomial> gens, int ie_cutoff = 20);

struct OracleOptions {
  long spair_budget = 1000000;
  int quick_order_candidates = 8;  // tiny Y search before falling back to completion
};

struct OracleRun {
  HilbertSeries series;
  bool generators_were_groebner = false;
  std::vector<VertexMonomial> initial_ideal;  // minimal generators
};

/// Independent route to HP_{K[P]}: Groebner basis of the inner 2-minors, then
/// the Hilbert series of the initial ideal (same Hilbert function).
OracleRun hilbert_oracle_run(const Polyomino& p, const OracleOptions& opts = {});

inline HilbertSeries hilbert_series_oracle(const Polyomino& p, const OracleOptions& opts = {}) {
  return hilbert_oracle_run(p, opts).series;
}

}  // namespace polyalg
