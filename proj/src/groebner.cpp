#include "polyalg/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

namespace polyalg {

int VertexMonomial::degree() const {
  int d = 0;
  for (auto& [v, k] : e) d += k;
  return d;
}

VertexMonomial mul(const VertexMonomial& a, const VertexMonomial& b) {
  VertexMonomial out;
  std::size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first))
      out.e.push_back(a.e[i++]);
    else if (i == a.e.size() || b.e[j].first < a.e[i].first)
      out.e.push_back(b.e[j++]);
    else {
      out.e.push_back({a.e[i].first, a.e[i].second + b.e[j].second});
      ++i, ++j;
    }
  }
  return out;
}

bool divides(const VertexMonomial& a, const VertexMonomial& b) {
  std::size_t j = 0;
  for (auto& [v, k] : a.e) {
    while (j < b.e.size() && b.e[j].first < v) ++j;
    if (j == b.e.size() || b.e[j].first != v || b.e[j].second < k) return false;
  }
  return true;
}

VertexMonomial quotient(const VertexMonomial& b, const VertexMonomial& a) {
  VertexMonomial out;
  std::size_t i = 0;
  for (auto& [v, k] : b.e) {
    int sub = 0;
    while (i < a.e.size() && a.e[i].first < v) ++i;
    if (i < a.e.size() && a.e[i].first == v) sub = a.e[i].second;
    if (k - sub > 0) out.e.push_back({v, k - sub});
  }
  return out;
}

VertexMonomial lcm(const VertexMonomial& a, const VertexMonomial& b) {
  VertexMonomial out;
  std::size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first))
      out.e.push_back(a.e[i++]);
    else if (i == a.e.size() || b.e[j].first < a.e[i].first)
      out.e.push_back(b.e[j++]);
    else {
      out.e.push_back({a.e[i].first, std::max(a.e[i].second, b.e[j].second)});
      ++i, ++j;
    }
  }
  return out;
}

bool coprime(const VertexMonomial& a, const VertexMonomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    if (a.e[i].first < b.e[j].first) ++i;
    else if (b.e[j].first < a.e[i].first) ++j;
    else return false;
  }
  return true;
}

VarId VertexIndex::id_of(GridPoint v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v)
    fail(Errc::cell_not_in_polyomino, "vertex is not a vertex of the polyomino");
  return static_cast<VarId>(it - verts_.begin());
}

LexOrderConfig LexOrderConfig::make(int nvars, const std::vector<VarId>& y_members) {
  LexOrderConfig cfg;
  cfg.in_y.assign(nvars, 0);
  for (VarId v : y_members) cfg.in_y.at(v) = 1;
  // ascending variable order: non-members by base order, then members by base order
  std::vector<VarId> by_order(nvars);
  for (int i = 0; i < nvars; ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](VarId u, VarId v) { return cfg.in_y[u] < cfg.in_y[v]; });
  cfg.rank.assign(nvars, 0);
  for (int pos = 0; pos < nvars; ++pos) cfg.rank[by_order[pos]] = pos;
  return cfg;
}

std::strong_ordering LexOrderConfig::compare(const VertexMonomial& a,
                                             const VertexMonomial& b) const {
  // walk both supports from the highest-ranked variable down
  std::vector<std::pair<int, int>> ra, rb;  // (rank, exp), descending
  for (auto& [v, k] : a.e) ra.push_back({rank[v], k});
  for (auto& [v, k] : b.e) rb.push_back({rank[v], k});
  std::sort(ra.rbegin(), ra.rend());
  std::sort(rb.rbegin(), rb.rend());
  std::size_t i = 0, j = 0;
  while (i < ra.size() || j < rb.size()) {
    if (j == rb.size()) return std::strong_ordering::greater;
    if (i == ra.size()) return std::strong_ordering::less;
    if (ra[i].first != rb[j].first)
      return ra[i].first > rb[j].first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (ra[i].second != rb[j].second)
      return ra[i].second > rb[j].second ? std::strong_ordering::greater : std::strong_ordering::less;
    ++i, ++j;
  }
  return std::strong_ordering::equal;
}

std::vector<VertexBinomial> inner_two_minors(const Polyomino& p, const VertexIndex& vars) {
  std::vector<VertexBinomial> out;
  for (const auto& iv : inner_intervals(p)) {
    VertexBinomial b;
    b.plus = mul(VertexMonomial::var(vars.id_of(iv.lo)), VertexMonomial::var(vars.id_of(iv.hi)));
    b.minus = mul(VertexMonomial::var(vars.id_of(iv.anti_lo())),
                  VertexMonomial::var(vars.id_of(iv.anti_hi())));
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

const VertexMonomial& lead(const VertexBinomial& g, const LexOrderConfig& order) {
  return order.compare(g.plus, g.minus) == std::strong_ordering::less ? g.minus : g.plus;
}

const VertexMonomial& trail(const VertexBinomial& g, const LexOrderConfig& order) {
  return order.compare(g.plus, g.minus) == std::strong_ordering::less ? g.plus : g.minus;
}

VertexBinomial spair(const VertexBinomial& f, const VertexBinomial& g,
                     const LexOrderConfig& order) {
  VertexMonomial l = lcm(lead(f, order), lead(g, order));
  return {mul(quotient(l, lead(f, order)), trail(f, order)),
          mul(quotient(l, lead(g, order)), trail(g, order))};
}

}  // namespace

std::optional<VertexBinomial> reduce_binomial(VertexBinomial h,
                                              const std::vector<VertexBinomial>& basis,
                                              const LexOrderConfig& order) {
  auto reducer_for = [&](const VertexMonomial& m) -> const VertexBinomial* {
    for (const auto& g : basis)
      if (divides(lead(g, order), m)) return &g;
    return nullptr;
  };
  while (true) {
    if (h.plus == h.minus) return std::nullopt;
    if (order.compare(h.plus, h.minus) == std::strong_ordering::less) std::swap(h.plus, h.minus);
    if (const VertexBinomial* g = reducer_for(h.plus)) {
      h.plus = mul(quotient(h.plus, lead(*g, order)), trail(*g, order));
      continue;
    }
    if (const VertexBinomial* g = reducer_for(h.minus)) {
      h.minus = mul(quotient(h.minus, lead(*g, order)), trail(*g, order));
      continue;
    }
    return h;
  }
}

BuchbergerResult buchberger(const std::vector<VertexBinomial>& gens, const LexOrderConfig& order,
                            long budget) {
  BuchbergerResult res;
  for (const auto& g : gens)
    if (!(g.plus == g.minus)) res.basis.push_back(g);
  auto& basis = res.basis;

  // normal strategy: lowest lcm degree first, then insertion order
  using Pair = std::tuple<int, std::size_t, std::size_t>;
  std::set<Pair> queue;
  auto push_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (coprime(lead(basis[i], order), lead(basis[k], order))) continue;  // product criterion
      int d = lcm(lead(basis[i], order), lead(basis[k], order)).degree();
      queue.insert({d, i, k});
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

  res.is_groebner_already = true;
  while (!queue.empty()) {
    if (res.spairs_processed >= budget)
      fail(Errc::budget_exceeded, "Buchberger S-pair budget exhausted after " +
                                      std::to_string(res.spairs_processed) + " pairs");
    auto [d, i, j] = *queue.begin();
    queue.erase(queue.begin());
    ++res.spairs_processed;
    auto nf = reduce_binomial(spair(basis[i], basis[j], order), basis, order);
    if (nf) {
      res.is_groebner_already = false;
      basis.push_back(*nf);
      push_pairs(basis.size() - 1);
    }
  }

  // reduced basis: minimal leads, then tail-reduce
  std::vector<VertexBinomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto &li = lead(basis[i], order), &lj = lead(basis[j], order);
      if (divides(lj, li) && (!(li == lj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (auto& g : minimal) {
    bool gplus_leads = order.compare(g.plus, g.minus) != std::strong_ordering::less;
    VertexMonomial t = gplus_leads ? g.minus : g.plus;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& other : minimal) {
        if (&other == &g) continue;
        if (divides(lead(other, order), t)) {
          t = mul(quotient(t, lead(other, order)), trail(other, order));
          changed = true;
        }
      }
    }
    (gplus_leads ? g.minus : g.plus) = t;
  }
  res.basis = std::move(minimal);
  return res;
}

bool spairs_reduce_to_zero(const std::vector<VertexBinomial>& gens, const LexOrderConfig& order) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (reduce_binomial(spair(gens[i], gens[j], order), gens, order)) return false;
  return true;
}

namespace {

/// First S-pair with a nonzero normal form, for conflict-driven search.
std::optional<VertexBinomial> first_failing_spair(const std::vector<VertexBinomial>& gens,
                                                  const LexOrderConfig& order) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto nf = reduce_binomial(spair(gens[i], gens[j], order), gens, order);
      if (nf) return nf;
    }
  return std::nullopt;
}

}  // namespace

std::optional<LexOrderConfig> find_groebner_lex_order(const Polyomino& p, const VertexIndex& vars,
                                                      const AnchorConstraints& anchors,
                                                      int candidate_budget) {
  auto gens = inner_two_minors(p, vars);
  int n = vars.size();
  std::vector<char> fixed(n, 0);
  std::vector<char> seed(n, 0);
  for (VarId v : anchors.must_in) {
    fixed[v] = 1;
    seed[v] = 1;
  }
  for (VarId v : anchors.must_out) fixed[v] = 1;

  std::set<std::vector<char>> visited;
  std::deque<std::vector<char>> queue{seed};
  visited.insert(seed);
  std::mt19937 rng(0);
  int tested = 0;

  while (tested < candidate_budget) {
    std::vector<char> cand;
    if (!queue.empty()) {
      cand = queue.front();
      queue.pop_front();
    } else {
      cand = seed;  // deterministic random restart over the free vertices
      for (int v = 0; v < n; ++v)
        if (!fixed[v]) cand[v] = static_cast<char>(rng() & 1);
      if (!visited.insert(cand).second) {
        ++tested;
        continue;
      }
    }
    ++tested;
    std::vector<VarId> members;
    for (int v = 0; v < n; ++v)
      if (cand[v]) members.push_back(v);
    auto order = LexOrderConfig::make(n, members);
    auto witness = first_failing_spair(gens, order);
    if (!witness) return order;
    // flip free vertices appearing in the offending normal form
    for (const auto& mono : {witness->plus, witness->minus})
      for (auto& [v, k] : mono.e) {
        if (fixed[v]) continue;
        auto next = cand;
        next[v] ^= 1;
        if (visited.insert(next).second) queue.push_back(next);
      }
  }
  return std::nullopt;
}

}  // namespace polyalg
