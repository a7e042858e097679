#include "polyalg/hilbert_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace polyalg {

namespace {

void minimalize(std::vector<VertexMonomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const VertexMonomial& a, const VertexMonomial& b) {
              return a.degree() != b.degree() ? a.degree() < b.degree() : a.e < b.e;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<VertexMonomial> kept;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  gens = std::move(kept);
}

void accumulate_ie(const std::vector<VertexMonomial>& gens, std::size_t idx,
                   const VertexMonomial& cur, int sign, std::vector<std::int64_t>& coeffs) {
  if (idx == gens.size()) {
    coeffs[cur.degree()] = checked_add(coeffs[cur.degree()], sign);
    return;
  }
  accumulate_ie(gens, idx + 1, cur, sign, coeffs);
  accumulate_ie(gens, idx + 1, lcm(cur, gens[idx]), -sign, coeffs);
}

IntPolynomial numerator_rec(std::vector<VertexMonomial> gens, int ie_cutoff);

/// Generators with disjoint supports contribute multiplicatively.
std::vector<std::vector<VertexMonomial>> support_components(
    const std::vector<VertexMonomial>& gens) {
  std::vector<int> parent(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::map<VarId, int> owner;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (auto& [v, k] : gens[i].e) {
      auto it = owner.find(v);
      if (it == owner.end())
        owner[v] = static_cast<int>(i);
      else
        parent[find(it->second)] = find(static_cast<int>(i));
    }
  std::map<int, std::vector<VertexMonomial>> groups;
  for (std::size_t i = 0; i < gens.size(); ++i) groups[find(static_cast<int>(i))].push_back(gens[i]);
  std::vector<std::vector<VertexMonomial>> out;
  for (auto& [root, group] : groups) out.push_back(std::move(group));
  return out;
}

IntPolynomial numerator_rec(std::vector<VertexMonomial> gens, int ie_cutoff) {
  minimalize(gens);
  if (gens.empty()) return IntPolynomial::one();
  if (gens.front().is_one()) return {};  // the whole ring is killed
  auto components = support_components(gens);
  if (components.size() > 1) {
    IntPolynomial prod = IntPolynomial::one();
    for (auto& comp : components) prod = prod * numerator_rec(std::move(comp), ie_cutoff);
    return prod;
  }
  if (static_cast<int>(gens.size()) <= ie_cutoff) {
    VertexMonomial top;
    for (const auto& m : gens) top = lcm(top, m);
    std::vector<std::int64_t> coeffs(top.degree() + 1, 0);
    accumulate_ie(gens, 0, {}, 1, coeffs);
    return IntPolynomial(std::move(coeffs));
  }
  // pivot split: num(I) = (1-t) num(I + (x) without x-multiples) + t num(I : x)
  std::map<VarId, int> freq;
  for (const auto& m : gens)
    for (auto& [v, k] : m.e) freq[v]++;
  VarId pivot = freq.begin()->first;
  for (auto& [v, cnt] : freq)
    if (cnt > freq[pivot]) pivot = v;

  std::vector<VertexMonomial> dropped, colon;
  VertexMonomial x = VertexMonomial::var(pivot);
  for (const auto& m : gens) {
    if (divides(x, m))
      colon.push_back(quotient(m, x));
    else {
      dropped.push_back(m);
      colon.push_back(m);
    }
  }
  IntPolynomial left = numerator_rec(std::move(dropped), ie_cutoff).times_one_minus_t();
  IntPolynomial right = numerator_rec(std::move(colon), ie_cutoff).shifted(1);
  return left + right;
}

}  // namespace

IntPolynomial monomial_hilbert_numerator(std::vector<VertexMonomial> gens, int ie_cutoff) {
  return numerator_rec(std::move(gens), ie_cutoff);
}

HilbertSeries monomial_hilbert_series(std::vector<VertexMonomial> gens, int nvars, int ie_cutoff) {
  return HilbertSeries(numerator_rec(std::move(gens), ie_cutoff), nvars);
}

OracleRun hilbert_oracle_run(const Polyomino& p, const OracleOptions& opts) {
  VertexIndex vars(p);
  auto gens = inner_two_minors(p, vars);
  auto empty_order = LexOrderConfig::make(vars.size(), {});

  std::vector<VertexBinomial> basis;
  LexOrderConfig order = empty_order;
  OracleRun run;
  auto found = find_groebner_lex_order(p, vars, {}, opts.quick_order_candidates);
  if (found) {
    order = *found;
    basis = gens;
    run.generators_were_groebner = true;
  } else {
    auto res = buchberger(gens, empty_order, opts.spair_budget);
    basis = std::move(res.basis);
    run.generators_were_groebner = res.is_groebner_already;
  }

  std::vector<VertexMonomial> leads;
  for (const auto& g : basis)
    leads.push_back(order.compare(g.plus, g.minus) == std::strong_ordering::less ? g.minus
                                                                                 : g.plus);
  minimalize(leads);
  run.initial_ideal = leads;
  run.series = monomial_hilbert_series(std::move(leads), vars.size());
  return run;
}

}  // namespace polyalg
