#include "polyalg/verify.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "polyalg/invariants.hpp"
#include "polyalg/io.hpp"

namespace polyalg {

namespace {

/// Instances processed in parallel, verdicts merged in input order.
std::vector<std::string> parallel_check(
    const std::vector<Polyomino>& instances,
    const std::function<std::string(const Polyomino&)>& check, int threads) {
  std::vector<std::string> verdicts(instances.size());
  unsigned n = threads > 0 ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, instances.empty() ? 1 : instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      try {
        verdicts[i] = check(instances[i]);
      } catch (const std::exception& e) {
        verdicts[i] = std::string("exception: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return verdicts;
}

CheckResult collect(const std::string& name, const std::vector<Polyomino>& instances,
                    const std::vector<std::string>& verdicts) {
  CheckResult res;
  res.name = name;
  res.instances = static_cast<long>(instances.size());
  for (std::size_t i = 0; i < verdicts.size(); ++i)
    if (!verdicts[i].empty())
      res.failures.push_back(render_ascii(instances[i]) + "\n-> " + verdicts[i]);
  res.pass = res.failures.empty();
  return res;
}

/// See-through convention (rooks attack along full rows/columns, ignoring
/// gaps); exists only as the negative control for the attack-convention test.
IntPolynomial rook_polynomial_see_through(const Polyomino& p) {
  const auto& cells = p.cells();
  int n = p.rank();
  std::vector<std::int64_t> counts(n + 1, 0);
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int i) -> void {
    counts[chosen.size()] = checked_add(counts[chosen.size()], 1);
    for (int j = i; j < n; ++j) {
      bool ok = true;
      for (int c : chosen)
        if (cells[c].x == cells[j].x || cells[c].y == cells[j].y) ok = false;
      if (!ok) continue;
      chosen.push_back(j);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return IntPolynomial(std::move(counts));
}

AnchorConstraints w_anchors(const WConfiguration& w, const VertexIndex& vars) {
  AnchorConstraints a;
  a.must_in = {vars.id_of(w.a), vars.id_of(w.d)};
  a.must_out = {vars.id_of(w.b), vars.id_of(w.c), vars.id_of(w.a_j[0]),
                vars.id_of(w.b_i[0]), vars.id_of(w.c_i[0]), vars.id_of(w.d_j[0])};
  if (w.case_id == 1)
    for (int j = 1; j < w.r; ++j) a.must_out.push_back(vars.id_of(w.d_j[j]));
  return a;
}

std::string check_three_way(const Polyomino& p, Inject inject) {
  auto rep = closed_path_invariants(p);
  if (!rep.h_formula) return "no decomposition formula applied";
  IntPolynomial hf = *rep.h_formula;
  if (inject == Inject::formula_sign) hf = hf + IntPolynomial::monomial(1);
  if (!(hf == rep.h_rook) || !rep.h_oracle || !(*rep.h_oracle == rep.h_rook))
    return "h_rook=" + rep.h_rook.str() + " h_formula[" + rep.formula + "]=" + hf.str() +
           " h_oracle=" + (rep.h_oracle ? rep.h_oracle->str() : "-");
  return {};
}

std::string check_gorenstein(const Polyomino& p, Inject inject) {
  IntPolynomial h =
      inject == Inject::attack_flip ? rook_polynomial_see_through(p) : rook_polynomial(p);
  bool blocks3 = true;
  for (Orientation o : {Orientation::horizontal, Orientation::vertical})
    for (const auto& b : maximal_blocks(p, o))
      if (b.rank != 3) blocks3 = false;
  bool sprop = s_property(p).holds;
  if (h.palindromic() != blocks3 || blocks3 != sprop)
    return "palindromic=" + std::to_string(h.palindromic()) +
           " blocks3=" + std::to_string(blocks3) + " s-property=" + std::to_string(sprop);
  return {};
}

std::string check_rook_relations(const Polyomino& p) {
  int rp = rook_number(p);
  if (auto lc = decompose_lc(p)) {
    int r1 = rook_number(lc->p1), r2 = rook_number(lc->p2), r3 = rook_number(lc->p3),
        r4 = rook_number(lc->p4);
    if (r1 != rp - 1 || r2 != rp - 1) return "r(P1)/r(P2) != r(P)-1";
    if (r3 != rp - 2) return "r(P3) != r(P)-2";
    if (r4 < rp - 2 || r4 > rp) return "r(P4) outside [r(P)-2, r(P)]";
  }
  if (auto l3 = decompose_ladder3(p)) {
    int k1 = rook_number(l3->k1), k2 = rook_number(l3->k2), k3 = rook_number(l3->k3),
        k4 = rook_number(l3->k4);
    if (k1 != rp - 1) return "r(K1) != r(P)-1";
    if (k2 < rp - 2 || k2 > rp - 1) return "r(K2) outside [r(P)-2, r(P)-1]";
    if (k3 != rp - 1) return "r(K3) != r(P)-1";
    if (k4 < rp - 2 || k4 > rp) return "r(K4) outside [r(P)-2, r(P)]";
  }
  return {};
}

std::string check_w_relations(const Polyomino& p) {
  auto w = decompose_w(p);
  if (!w) return "expected a W-configuration";
  const Polyomino& oriented = w->oriented;
  if (!hp_q_relation_check(oriented, *w)) return "HP(P) != HP(Q) + t/(1-t) HP(Q1)";
  auto rep = weakly_closed_invariants(w->q, oriented, *w);
  if (!rep.methods_agree) return "weakly closed invariants disagree";
  if (!is_weakly_closed_path(w->q)) return "Q is not a weakly closed path";
  if (find_weak_ladders(w->q).empty()) return "Q has no weak ladder";
  VertexIndex vars(oriented);
  auto order = find_groebner_lex_order(oriented, vars, w_anchors(*w, vars));
  if (!order) return "no anchored lex order certified the generators";
  auto gens = inner_two_minors(oriented, vars);
  if (!spairs_reduce_to_zero(gens, *order)) return "anchored order failed the S-pair test";
  return {};
}

std::string check_ladder3_fixture(const Polyomino& p) {
  if (!closed_path_sequence(p)) return "fixture is not a closed path";
  if (!find_l_configurations(p).empty()) return "fixture has an L-configuration";
  if (find_ladders(p).first < 3) return "fixture has no 3-step ladder";
  auto l3 = decompose_ladder3(p);
  if (!l3) return "no ladder3 decomposition";
  if (l3->r < 2 || l3->s < 2) return "anchored blocks too short";
  if (!(h_ladder3(p, *l3) == rook_polynomial(p))) return "h_ladder3 != rook polynomial";
  return {};
}

}  // namespace

std::vector<Polyomino> ladder3_fixtures() {
  auto mk = [](std::vector<Cell> cells) {
    return Polyomino(std::move(cells)).translated_to_origin();
  };
  return {
      mk({{-1, 1}, {-1, 2}, {-1, 3}, {-1, 4}, {-1, 5}, {0, 0}, {0, 1}, {0, 5}, {0, 6},
          {1, 0},  {1, 6},  {2, 0},  {2, 1},  {2, 6},  {3, 1}, {3, 6}, {4, 1}, {4, 2},
          {4, 6},  {5, 2},  {5, 6},  {6, 2},  {6, 3},  {6, 5}, {6, 6}, {7, 3}, {7, 4},
          {7, 5}}),
      mk({{-1, 1}, {-1, 2}, {-1, 3}, {-1, 4}, {-1, 5}, {0, 0}, {0, 1}, {0, 5}, {0, 6},
          {1, 0},  {1, 6},  {2, 0},  {2, 1},  {2, 6},  {3, 1}, {3, 6}, {4, 1}, {4, 2},
          {4, 6},  {5, 2},  {5, 6},  {6, 2},  {6, 6},  {7, 2}, {7, 3}, {7, 5}, {7, 6},
          {8, 3},  {8, 4},  {8, 5}}),
  };
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<CheckResult> out;

  GenerateOptions ring_opts;
  ring_opts.max_rank = opts.max_rank;
  ring_opts.closed_paths = true;
  ring_opts.cap = std::max(opts.max_rank, opts.w_rank);
  std::vector<Polyomino> rings = generate(ring_opts);

  GenerateOptions big_opts = ring_opts;
  big_opts.max_rank = std::max(opts.max_rank, opts.w_rank);
  std::vector<Polyomino> big_rings = generate(big_opts);

  std::vector<Polyomino> prime, wcorpus, fixtures;
  for (const auto& p : rings)
    if (is_prime_closed_path(p)) prime.push_back(p);
  for (const auto& p : big_rings)
    if (is_prime_closed_path(p) && !decompose_lc(p) && decompose_w(p)) wcorpus.push_back(p);
  if (opts.with_fixtures) fixtures = ladder3_fixtures();

  std::vector<Polyomino> simples;
  for (auto& p : enumerate_polyominoes(opts.simple_rank))
    if (find_holes(p).empty()) simples.push_back(std::move(p));

  // section-2 equivalence on every ring, including the zig-zag ones
  out.push_back(collect(
      "zigzag-equivalence", big_rings,
      parallel_check(
          big_rings,
          [](const Polyomino& p) -> std::string {
            bool via_config = !find_l_configurations(p).empty() || find_ladders(p).first >= 3;
            if (via_config != find_zig_zag_walks(p).empty())
              return "zig-zag emptiness disagrees with the L-configuration/ladder route";
            return {};
          },
          opts.threads)));

  {
    std::vector<Polyomino> insts = prime;
    insts.insert(insts.end(), wcorpus.begin(), wcorpus.end());
    insts.insert(insts.end(), fixtures.begin(), fixtures.end());
    out.push_back(collect(
        "three-way-agreement", insts,
        parallel_check(
            insts, [&](const Polyomino& p) { return check_three_way(p, opts.inject); },
            opts.threads)));
  }

  {
    std::vector<Polyomino> insts = prime;
    insts.insert(insts.end(), wcorpus.begin(), wcorpus.end());
    insts.insert(insts.end(), simples.begin(), simples.end());
    out.push_back(collect(
        "krull-dimension-identity", insts,
        parallel_check(
            insts,
            [](const Polyomino& p) -> std::string {
              auto hs = hilbert_series_oracle(p);
              int expect = static_cast<int>(p.vertices().size()) - p.rank();
              if (hs.denom_exp != expect)
                return "oracle dimension " + std::to_string(hs.denom_exp) + " expected " +
                       std::to_string(expect);
              return {};
            },
            opts.threads)));
  }

  {
    std::vector<Polyomino> insts = prime;
    insts.insert(insts.end(), wcorpus.begin(), wcorpus.end());
    insts.insert(insts.end(), fixtures.begin(), fixtures.end());
    out.push_back(collect(
        "gorenstein-equivalence", insts,
        parallel_check(
            insts, [&](const Polyomino& p) { return check_gorenstein(p, opts.inject); },
            opts.threads)));
    out.push_back(collect("rook-number-relations", insts,
                          parallel_check(insts, check_rook_relations, opts.threads)));
  }

  out.push_back(collect("w-configuration-relations", wcorpus,
                        parallel_check(wcorpus, check_w_relations, opts.threads)));

  out.push_back(collect("ladder3-fixtures", fixtures,
                        parallel_check(fixtures, check_ladder3_fixture, opts.threads)));

  // simple thin shapes: the h-polynomial must be the rook polynomial
  {
    std::vector<Polyomino> thin;
    for (const auto& p : simples)
      if (is_thin(p)) thin.push_back(p);
    out.push_back(collect(
        "simple-thin-h-equals-rook", thin,
        parallel_check(
            thin,
            [](const Polyomino& p) -> std::string {
              auto hs = hilbert_series_oracle(p);
              if (!(hs.num == rook_polynomial(p)))
                return "oracle " + hs.num.str() + " != rook " + rook_polynomial(p).str();
              return {};
            },
            opts.threads)));
  }

  return out;
}

}  // namespace polyalg
