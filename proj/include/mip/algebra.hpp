#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mip/blackbox.hpp"
#include "mip/gfp.hpp"
#include "mip/pgroup.hpp"

namespace mip {

struct AlgebraOptions {
  std::uint64_t order_cap = 0;  // 0: per-characteristic default (2048 / 2187 / 3125)
  std::size_t max_levels = 0;   // 0: adaptive, until the power vanishes
};

// Powers of the augmentation ideal of F_p[G], one echelon basis per level.
// Level 0 (the whole algebra) is implicit; the last stored level is zero.
struct Filtration {
  std::int64_t p = 2;
  std::size_t n = 0;                 // |G|
  std::vector<std::size_t> dims;     // dims[k] = dim of level k, dims[0] == n
  std::vector<EchelonBasis> levels;  // levels[k-1] = basis of level k, k >= 1

  std::size_t length() const { return dims.size() - 1; }  // first k with dim 0
  bool member(std::size_t k, const FpVec& v) const;
  FpVec residue(std::size_t k, FpVec v) const;  // canonical representative mod level k
};

// Coefficient vector of g - 1.
FpVec group_diff(std::size_t n, std::int64_t p, std::int32_t g);

// Product in F_p[G] by convolution over the multiplication table.
FpVec algebra_mul(const BlackBoxGroup& G, std::int64_t p, const FpVec& u, const FpVec& v);

// Build the filtration: level 1 is spanned by {g - 1}; each next level is
// spanned by row*(s - 1) over basis rows and group generators s (a product
// u*(g-1) with g a generator word telescopes into such terms because every
// level is an ideal).
Filtration delta_powers(const BlackBoxGroup& G, const AlgebraOptions& opt = {});

// {g : g - 1 lies in filtration level k}, as sorted element indices.
std::vector<std::int32_t> dimension_subgroup_direct(const BlackBoxGroup& G,
                                                    const Filtration& F, std::uint64_t k);

// Closed-form chain inside the constructed group: level 1 is everything, and
// past that the subgroup generated by a^{p^k}, b1^{p^{k+1}}, b2^{p^{k+1}}
// (or with a^{p^{k+1}} on the tail segment of each p-adic block).
std::vector<std::uint64_t> dimension_subgroup_formula(const PGroup2& G, std::uint64_t k);
std::uint64_t dimension_subgroup_formula_size(const PGroup2& G, std::uint64_t k);

// d_k with p^{d_k} = [M_{2p^k} : M_{2p^k + 1}], trailing zeros trimmed.
std::vector<int> jennings_dims_formula(const PGroup2& G);
std::vector<int> jennings_dims_direct(const BlackBoxGroup& G, const Filtration& F);

// Largest k >= 1 with g - 1 in level k (g != identity).
std::size_t filtration_weight(const Filtration& F, std::int32_t g);

// Ranks r_k = log_p [M_k : M_{k+1}] of the consecutive quotients, direct path.
std::vector<std::pair<std::size_t, int>> jennings_weight_ranks(const BlackBoxGroup& G,
                                                               const Filtration& F);

// Graded dimensions predicted by the quotient ranks: the weight-w coefficient
// of prod_k (1 + q^k + ... + q^{(p-1)k})^{r_k}.
std::vector<std::size_t> graded_dims_from_ranks(
    std::int64_t p, const std::vector<std::pair<std::size_t, int>>& ranks);

// |X_i| for i = 1.., where X_i collects the residues spanned by the classes
// of 1+g1, 1+g2 that the chain of squaring maps kills by stage i; stops once
// all four residues are dead (the counts are constant from there on).
// Characteristic 2 only.  A generating pair may be supplied; by default a
// minimal one is computed.
std::vector<int> squaring_kernel_sizes(const BlackBoxGroup& G, const Filtration& F,
                                       int i_max = 0);
std::vector<int> squaring_kernel_sizes(const BlackBoxGroup& G, const Filtration& F,
                                       std::pair<std::int32_t, std::int32_t> gens,
                                       int i_max = 0);

}  // namespace mip
