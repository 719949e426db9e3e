#include "mip/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "mip/arith.hpp"

namespace mip {

namespace {

std::uint64_t default_order_cap(std::int64_t p) {
  if (p == 2) return 2048;
  if (p == 3) return 2187;
  return 3125;
}

}  // namespace

bool Filtration::member(std::size_t k, const FpVec& v) const {
  if (k == 0) return true;
  if (k <= levels.size()) return levels[k - 1].contains(v);
  return fp_is_zero(v);  // levels past the last stored one are zero
}

FpVec Filtration::residue(std::size_t k, FpVec v) const {
  if (k == 0) return FpVec(n, 0);
  if (k <= levels.size()) return levels[k - 1].reduce(std::move(v));
  return v;
}

FpVec group_diff(std::size_t n, std::int64_t p, std::int32_t g) {
  FpVec v(n, 0);
  if (g != 0) {
    v[static_cast<std::size_t>(g)] = 1;
    v[0] = static_cast<std::uint8_t>(p - 1);
  }
  return v;
}

FpVec algebra_mul(const BlackBoxGroup& G, std::int64_t p, const FpVec& u, const FpVec& v) {
  const std::size_t n = u.size();
  FpVec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!u[i]) continue;
    const int ui = u[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (!v[j]) continue;
      std::size_t k = static_cast<std::size_t>(
          G.mul(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)));
      out[k] = static_cast<std::uint8_t>((out[k] + ui * v[j]) % p);
    }
  }
  return out;
}

Filtration delta_powers(const BlackBoxGroup& G, const AlgebraOptions& opt) {
  const std::int64_t p = group_prime(G);
  const std::uint64_t cap = opt.order_cap ? opt.order_cap : default_order_cap(p);
  const std::size_t n = static_cast<std::size_t>(G.size());
  if (n > cap) throw std::runtime_error("cap-exceeded: augmentation filtration order cap");

  Filtration F;
  F.p = p;
  F.n = n;
  F.dims.push_back(n);

  EchelonBasis level1(p, n);
  for (std::int32_t g = 1; g < G.size(); ++g) level1.insert(group_diff(n, p, g));
  F.dims.push_back(level1.rank());
  F.levels.push_back(std::move(level1));

  const std::vector<std::int32_t> gens = generating_set(G);
  const std::size_t hard_cap =
      opt.max_levels ? opt.max_levels : 4 * static_cast<std::size_t>(group_exponent(G)) + 4;

  while (F.levels.back().rank() > 0) {
    if (F.levels.size() > hard_cap)
      throw std::runtime_error("internal: filtration depth exceeded its hard cap");
    const EchelonBasis& prev = F.levels.back();
    EchelonBasis next(p, n);
    FpVec v(n, 0);
    for (std::size_t r = 0; r < prev.rank(); ++r) {
      FpVec row = prev.row(r);
      for (std::int32_t s : gens) {
        // row * (s - 1): shift coefficients by right multiplication, minus row
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t i = 0; i < n; ++i)
          if (row[i]) v[static_cast<std::size_t>(G.mul(static_cast<std::int32_t>(i), s))] = row[i];
        for (std::size_t i = 0; i < n; ++i) {
          int t = v[i] + static_cast<int>(p) - row[i];
          v[i] = static_cast<std::uint8_t>(t % p);
        }
        next.insert(v);
      }
    }
    F.dims.push_back(next.rank());
    F.levels.push_back(std::move(next));
  }
  return F;
}

std::vector<std::int32_t> dimension_subgroup_direct(const BlackBoxGroup& G,
                                                    const Filtration& F, std::uint64_t k) {
  std::vector<std::int32_t> out;
  for (std::int32_t g = 0; g < G.size(); ++g)
    if (F.member(static_cast<std::size_t>(std::min<std::uint64_t>(k, F.levels.size() + 1)),
                 group_diff(F.n, F.p, g)))
      out.push_back(g);
  return out;
}

namespace {

// Generators of the closed-form subgroup at level k >= 2.
std::vector<Elem> formula_generators(const PGroup2& G, std::uint64_t k) {
  const auto p = static_cast<std::uint64_t>(G.tuple().p);
  std::uint64_t pj = 1;
  while (!(pj < k && k <= pj * p)) pj *= p;  // p^j < k <= p^{j+1}
  std::uint64_t ea = (k <= 2 * pj) ? pj : pj * p;
  std::uint64_t eb = pj * p;
  return {G.pow(G.gen_a(), ea), G.pow(G.gen_b1(), eb), G.pow(G.gen_b2(), eb)};
}

}  // namespace

std::vector<std::uint64_t> dimension_subgroup_formula(const PGroup2& G, std::uint64_t k) {
  if (k < 1) throw std::runtime_error("invalid-level: dimension subgroups start at 1");
  if (k == 1) {
    std::vector<std::uint64_t> all(G.order());
    for (std::uint64_t i = 0; i < G.order(); ++i) all[i] = i;
    return all;
  }
  return subgroup_closure(G, formula_generators(G, k));
}

std::uint64_t dimension_subgroup_formula_size(const PGroup2& G, std::uint64_t k) {
  if (k == 1) return G.order();
  return subgroup_closure(G, formula_generators(G, k)).size();
}

namespace {

std::vector<int> trim_zeros(std::vector<int> d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

}  // namespace

std::vector<int> jennings_dims_formula(const PGroup2& G) {
  const auto p = static_cast<std::uint64_t>(G.tuple().p);
  std::vector<int> d;
  std::uint64_t pk = 1;
  for (;;) {
    std::uint64_t szA = dimension_subgroup_formula_size(G, 2 * pk);
    std::uint64_t szB = dimension_subgroup_formula_size(G, 2 * pk + 1);
    if (szA % szB != 0) throw std::runtime_error("internal: dimension chain is not nested");
    d.push_back(exact_log(szA / szB, p));
    if (szA == 1) break;
    pk *= p;
  }
  return trim_zeros(std::move(d));
}

std::vector<int> jennings_dims_direct(const BlackBoxGroup& G, const Filtration& F) {
  const auto p = static_cast<std::uint64_t>(F.p);
  std::vector<int> d;
  std::uint64_t pk = 1;
  for (;;) {
    std::uint64_t szA = dimension_subgroup_direct(G, F, 2 * pk).size();
    std::uint64_t szB = dimension_subgroup_direct(G, F, 2 * pk + 1).size();
    if (szA % szB != 0) throw std::runtime_error("internal: dimension chain is not nested");
    d.push_back(exact_log(szA / szB, p));
    if (szA == 1) break;
    pk *= p;
  }
  return trim_zeros(std::move(d));
}

std::size_t filtration_weight(const Filtration& F, std::int32_t g) {
  if (g == 0) return F.length();  // the zero vector lies in every level
  FpVec v = group_diff(F.n, F.p, g);
  std::size_t k = 1;
  while (F.member(k + 1, v)) ++k;
  return k;
}

std::vector<std::pair<std::size_t, int>> jennings_weight_ranks(const BlackBoxGroup& G,
                                                               const Filtration& F) {
  const auto p = static_cast<std::uint64_t>(F.p);
  std::vector<std::pair<std::size_t, int>> ranks;
  std::size_t prev = static_cast<std::size_t>(G.size());
  for (std::size_t k = 2;; ++k) {
    std::size_t cur = dimension_subgroup_direct(G, F, k).size();
    if (cur != prev) ranks.emplace_back(k - 1, exact_log(prev / cur, p));
    prev = cur;
    if (cur == 1) break;
  }
  return ranks;
}

std::vector<std::size_t> graded_dims_from_ranks(
    std::int64_t p, const std::vector<std::pair<std::size_t, int>>& ranks) {
  std::size_t top = 0;
  for (auto [w, r] : ranks) top += w * static_cast<std::size_t>(p - 1) * r;
  std::vector<std::size_t> dp(top + 1, 0);
  dp[0] = 1;
  for (auto [w, r] : ranks)
    for (int rep = 0; rep < r; ++rep) {
      std::vector<std::size_t> nxt(top + 1, 0);
      for (std::size_t i = 0; i <= top; ++i) {
        if (!dp[i]) continue;
        for (std::int64_t e = 0; e < p; ++e) {
          std::size_t j = i + w * static_cast<std::size_t>(e);
          if (j > top) break;
          nxt[j] += dp[i];
        }
      }
      dp = std::move(nxt);
    }
  return dp;
}

std::vector<int> squaring_kernel_sizes(const BlackBoxGroup& G, const Filtration& F,
                                       int i_max) {
  std::vector<std::int32_t> gens = generating_set(G);
  if (gens.size() != 2)
    throw std::runtime_error("not-2-generated: squaring chain needs two generators");
  return squaring_kernel_sizes(G, F, {gens[0], gens[1]}, i_max);
}

std::vector<int> squaring_kernel_sizes(const BlackBoxGroup& G, const Filtration& F,
                                       std::pair<std::int32_t, std::int32_t> gens,
                                       int i_max) {
  if (F.p != 2) throw std::runtime_error("invalid-characteristic: squaring chain needs p = 2");
  const std::size_t n = F.n;
  // the four residues alpha1 (1+g1) + alpha2 (1+g2) of level1/level2
  struct State {
    FpVec rep;
    bool dead = false;
  };
  std::vector<State> states(4);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2) {
      FpVec v(n, 0);
      v[0] = static_cast<std::uint8_t>((a1 + a2) & 1);
      v[static_cast<std::size_t>(gens.first)] ^= static_cast<std::uint8_t>(a1);
      v[static_cast<std::size_t>(gens.second)] ^= static_cast<std::uint8_t>(a2);
      states[a1 * 2 + a2].rep = std::move(v);
      states[a1 * 2 + a2].dead = (a1 == 0 && a2 == 0);
    }
  std::vector<int> counts;
  std::uint64_t target = 1;  // 2^i
  for (int i = 1;; ++i) {
    target *= 2;
    for (auto& st : states) {
      if (st.dead) continue;
      FpVec sq = algebra_mul(G, 2, st.rep, st.rep);
      // squaring sends level-(2^{i-1}) cosets to level-(2^i) cosets, so the
      // canonical residue below is lift-independent
      st.rep = F.residue(static_cast<std::size_t>(target + 1), std::move(sq));
      st.dead = fp_is_zero(st.rep);
    }
    int dead = 0;
    for (const auto& st : states) dead += st.dead ? 1 : 0;
    counts.push_back(dead);
    if (i_max > 0 ? i >= i_max : dead == 4) break;
    if (i > 62) throw std::runtime_error("internal: squaring chain failed to terminate");
  }
  return counts;
}

}  // namespace mip
