#include "polyalg/invariants.hpp"

#include <stdexcept>

namespace polyalg {

namespace {

int coordinate_dim(const Polyomino& p) {
  return static_cast<int>(p.vertices().size()) - p.rank();
}

/// Component h-polynomial: rook shortcut for simple thin pieces, oracle otherwise.
IntPolynomial component_h(const Polyomino& p) {
  if (find_holes(p).empty() && is_thin(p)) return rook_polynomial(p);
  return hilbert_series_oracle(p).num;
}

}  // namespace

IntPolynomial h_simple_thin(const Polyomino& p) {
  if (!find_holes(p).empty() || !is_thin(p))
    fail(Errc::not_simple_thin, "h-polynomial shortcut needs a simple thin polyomino");
  return rook_polynomial(p);
}

HilbertSeries hp_lc_general(const LCDecomposition& dec, const HilbertSeries& hp1,
                            const HilbertSeries& hp2, const HilbertSeries& hp3,
                            const HilbertSeries& hp4) {
  HilbertSeries bracket = series_add(series_scale_frac(hp1, dec.r - 2),
                                     series_add(series_scale_frac(hp2, dec.s - 2),
                                                series_scale_frac(hp3, dec.s + dec.r - 3)));
  return series_add(series_scale_frac(hp4, 1), series_shift(series_scale_frac(bracket, 1), 1));
}

IntPolynomial h_lc_simple(const Polyomino& p, const LCDecomposition& dec) {
  if (!find_holes(dec.p3).empty())
    fail(Errc::complement_not_simple, "the complement C must be a simple polyomino");
  IntPolynomial h1 = component_h(dec.p1), h2 = component_h(dec.p2), h3 = component_h(dec.p3),
                h4 = component_h(dec.p4);
  IntPolynomial h = h4 + (h1 + h2 + h3.times_one_minus_t()).shifted(1);
  (void)p;
  return h;
}

IntPolynomial h_1config(const Polyomino& p, const WConfiguration& w) {
  if (w.case_id != 1) fail(Errc::wrong_case, "decomposition is not a 1-Configuration");
  (void)p;
  return component_h(w.r1) + (component_h(w.r2) + component_h(w.q1)).shifted(1);
}

IntPolynomial h_2config(const Polyomino& p, const WConfiguration& w) {
  if (w.case_id != 2) fail(Errc::wrong_case, "decomposition is not a 2-Configuration");
  (void)p;
  IntPolynomial hq1 = component_h(w.q1);
  return hq1 + hq1.shifted(1) + (component_h(w.f1) + component_h(w.f2)).shifted(1);
}

IntPolynomial h_ladder3(const Polyomino& p, const Ladder3Decomposition& dec) {
  (void)p;
  IntPolynomial h2 = component_h(dec.k2);
  return component_h(dec.k4) +
         (component_h(dec.k1) + h2 + h2 + component_h(dec.k3)).shifted(1);
}

bool hp_q_relation_check(const Polyomino& p, const WConfiguration& w) {
  HilbertSeries left = hilbert_series_oracle(p);
  HilbertSeries right = series_add(
      hilbert_series_oracle(w.q),
      series_shift(series_scale_frac(hilbert_series_oracle(w.q1), 1), 1));
  return left == right;
}

InvariantsReport weakly_closed_invariants(const Polyomino& q, const Polyomino& p,
                                          const WConfiguration& w) {
  // q must be p minus the corner cell A of the W collection
  Polyomino expected = w.q;
  if (canonical_form(q) != canonical_form(expected))
    fail(Errc::not_from_w_configuration, "q does not arise as P minus the W corner cell");

  InvariantsReport rep;
  IntPolynomial h_p = rook_polynomial(p);
  IntPolynomial h_q1 = h_simple_thin(w.q1);
  // HP(P) = HP(Q) + t/(1-t) HP(Q1) over (1-t)^(|V(P)|-rank P)
  IntPolynomial h = h_p - h_q1.shifted(1);
  rep.h_rook = rook_polynomial(q);
  rep.h_formula = h;
  rep.formula = "weakly-closed";
  if (!(h == rep.h_rook))
    throw std::logic_error("weakly closed h-polynomial does not match the rook polynomial");
  rep.krull_dim = coordinate_dim(q);
  if (rep.krull_dim != coordinate_dim(p))
    throw std::logic_error("dimension identity |V|-rank broken between P and Q");
  rep.hp = HilbertSeries(h, rep.krull_dim);
  rep.regularity = h.degree();
  rep.gorenstein = s_property(q).holds;
  if (rep.gorenstein != h.palindromic())
    throw std::logic_error("Gorenstein flag disagrees with h palindromicity");
  rep.methods_agree = true;
  return rep;
}

InvariantsReport closed_path_invariants(const Polyomino& p, const ClosedPathOptions& opts) {
  if (!closed_path_sequence(p)) fail(Errc::not_a_closed_path, "input is not a closed path");
  if (!is_prime_closed_path(p))
    fail(Errc::has_zig_zag,
         "closed path has zig-zag walks; the formulas do not apply (oracle-only mode available)");

  InvariantsReport rep;
  rep.h_rook = rook_polynomial(p);

  if (opts.run_formula) {
    if (auto lc = decompose_lc(p)) {
      rep.h_formula = h_lc_simple(p, *lc);
      rep.formula = "lc";
    } else if (auto w = decompose_w(p)) {
      rep.h_formula = w->case_id == 1 ? h_1config(p, *w) : h_2config(p, *w);
      rep.formula = w->case_id == 1 ? "1config" : "2config";
    } else if (auto l3 = decompose_ladder3(p)) {
      rep.h_formula = h_ladder3(p, *l3);
      rep.formula = "ladder3";
    } else {
      fail(Errc::no_decomposition, "no decomposition scheme applies to this closed path");
    }
  }

  int dim = coordinate_dim(p);
  if (opts.run_oracle) {
    HilbertSeries hs = hilbert_series_oracle(p, opts.oracle);
    rep.h_oracle = hs.num;
    if (hs.denom_exp != dim)
      throw std::logic_error("oracle Krull dimension disagrees with |V| - rank");
  }

  rep.methods_agree = true;
  if (rep.h_formula && !(*rep.h_formula == rep.h_rook)) rep.methods_agree = false;
  if (rep.h_oracle && !(*rep.h_oracle == rep.h_rook)) rep.methods_agree = false;

  rep.hp = HilbertSeries(rep.h_rook, dim);
  rep.krull_dim = dim;
  rep.regularity = rep.h_rook.degree();
  rep.gorenstein = s_property_closed_path(p);
  if (rep.methods_agree && rep.gorenstein != rep.h_rook.palindromic())
    throw std::logic_error("S-property disagrees with h palindromicity");
  return rep;
}

bool gorenstein(const Polyomino& p) {
  if (closed_path_sequence(p)) {
    if (!is_prime_closed_path(p))
      fail(Errc::out_of_scope_class, "Gorenstein criterion needs a closed path without zig-zags");
    bool s = s_property_closed_path(p);
    if (s != rook_polynomial(p).palindromic())
      throw std::logic_error("S-property disagrees with rook palindromicity on a closed path");
    return s;
  }
  if (find_holes(p).empty() && is_thin(p)) {
    bool s = s_property(p).holds;
    if (s != rook_polynomial(p).palindromic())
      throw std::logic_error("S-property disagrees with rook palindromicity on a simple thin input");
    return s;
  }
  fail(Errc::out_of_scope_class,
       "Gorenstein verdict is only claimed for simple thin polyominoes and prime closed paths");
}

}  // namespace polyalg
