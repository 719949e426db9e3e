#include <algorithm>

#include <stdexcept>

#include "doctest.h"
#include "mip/algebra.hpp"
#include "mip/arith.hpp"
#include "mip/canon.hpp"
#include "mip/pgroup.hpp"

using namespace mip;

namespace {

BlackBoxGroup table_of(const Tuple5& t) { return PGroup2(t).multiplication_table(); }

std::vector<std::int32_t> formula_as_table_indices(const PGroup2& G, std::uint64_t k) {
  std::vector<std::int32_t> out;
  for (std::uint64_t idx : dimension_subgroup_formula(G, k))
    out.push_back(static_cast<std::int32_t>(idx));
  return out;
}

}  // namespace

TEST_CASE("filtration dimensions of the quaternion algebra over F2") {
  PGroup2 q8(Tuple5{2, 1, 1, 1, 0, 0});
  BlackBoxGroup tab = q8.multiplication_table();
  Filtration F = delta_powers(tab);
  // graded count oracle: quotient ranks are (weight 1, rank 2), (weight 2,
  // rank 1), so the graded algebra has dimensions 1,2,2,2,1 by weight and the
  // filtration dimensions are the tail sums 8,7,5,3,1,0
  CHECK(F.dims == std::vector<std::size_t>{8, 7, 5, 3, 1, 0});
  auto ranks = jennings_weight_ranks(tab, F);
  CHECK(ranks == std::vector<std::pair<std::size_t, int>>{{1, 2}, {2, 1}});
  auto graded = graded_dims_from_ranks(2, ranks);
  CHECK(graded == std::vector<std::size_t>{1, 2, 2, 2, 1});
  // first level whose dimension subgroup is trivial
  CHECK(dimension_subgroup_direct(tab, F, 2).size() == 2);
  CHECK(dimension_subgroup_direct(tab, F, 3).size() == 1);
}

TEST_CASE("the residue space of level one over level two is two dimensional") {
  for (const Tuple5& t :
       {Tuple5{2, 1, 1, 1, 0, 0}, Tuple5{2, 1, 2, 1, 1, 0}, Tuple5{3, 1, 1, 1, 0, 0},
        Tuple5{3, 1, 2, 1, 1, 1}}) {
    BlackBoxGroup tab = table_of(t);
    Filtration F = delta_powers(tab);
    CHECK(F.dims[1] - F.dims[2] == 2);
  }
}

TEST_CASE("closed-form dimension subgroups match the direct ones") {
  for (std::int64_t p : {2, 3}) {
    for (const Tuple5& t : enumerate_admissible(p, 5)) {
      PGroup2 g(t);
      BlackBoxGroup tab = g.multiplication_table();
      Filtration F = delta_powers(tab);
      bool trivial = false;
      for (std::uint64_t k = 1; !trivial; ++k) {
        auto direct = dimension_subgroup_direct(tab, F, k);
        auto formula = formula_as_table_indices(g, k);
        REQUIRE(direct == formula);
        trivial = direct.size() == 1 && formula.size() == 1;
      }
    }
  }
}

TEST_CASE("examples of the closed-form chain") {
  PGroup2 g(Tuple5{3, 1, 1, 1, 0, 0});
  CHECK(dimension_subgroup_formula(g, 1).size() == 27);
  auto m2 = dimension_subgroup_formula(g, 2);
  CHECK(m2.size() == 3);  // <a>, since b_i^3 = a
  CHECK(std::count(m2.begin(), m2.end(), g.index_of(g.gen_a())) == 1);
  CHECK(dimension_subgroup_formula(g, 3).size() == 3);  // a = b1^3 lies in G^3
}

TEST_CASE("dimension quotients d_k") {
  CHECK(jennings_dims_formula(PGroup2(Tuple5{2, 1, 1, 1, 0, 0})) == std::vector<int>{1});
  CHECK(jennings_dims_formula(PGroup2(Tuple5{2, 1, 1, 1, 0, 1})) == std::vector<int>{1});
  CHECK(jennings_dims_formula(PGroup2(Tuple5{3, 1, 1, 1, 0, 0})).empty());  // d_0 = 0
  for (std::int64_t p : {2, 3}) {
    for (const Tuple5& t : enumerate_admissible(p, 5)) {
      PGroup2 g(t);
      BlackBoxGroup tab = g.multiplication_table();
      Filtration F = delta_powers(tab);
      CHECK(jennings_dims_formula(g) == jennings_dims_direct(tab, F));
    }
  }
}

TEST_CASE("graded dimensions agree with the filtration on a sweep") {
  for (std::int64_t p : {2, 3}) {
    for (const Tuple5& t : enumerate_admissible(p, p == 2 ? 6 : 5)) {
      BlackBoxGroup tab = table_of(t);
      Filtration F = delta_powers(tab);
      auto graded = graded_dims_from_ranks(p, jennings_weight_ranks(tab, F));
      REQUIRE(graded.size() == F.dims.size() - 1);
      for (std::size_t w = 0; w + 1 < F.dims.size(); ++w)
        CHECK(graded[w] == F.dims[w] - F.dims[w + 1]);
    }
  }
}

TEST_CASE("products of filtration levels nest") {
  BlackBoxGroup tab = table_of(Tuple5{2, 1, 2, 1, 1, 0});
  Filtration F = delta_powers(tab);
  SplitMix64 rng(313);
  for (int it = 0; it < 30; ++it) {
    std::size_t a = 1 + rng.below(3), b = 1 + rng.below(3);
    if (a >= F.levels.size() || b >= F.levels.size()) continue;
    const EchelonBasis& ba = F.levels[a - 1];
    const EchelonBasis& bb = F.levels[b - 1];
    if (ba.rank() == 0 || bb.rank() == 0) continue;
    FpVec u = ba.row(rng.below(ba.rank()));
    FpVec v = bb.row(rng.below(bb.rank()));
    CHECK(F.member(a + b, algebra_mul(tab, 2, u, v)));
  }
}

TEST_CASE("commutation congruence in the associated graded algebra") {
  for (const Tuple5& t : {Tuple5{2, 1, 2, 1, 1, 1}, Tuple5{3, 1, 1, 1, 1, 1}}) {
    BlackBoxGroup tab = table_of(t);
    Filtration F = delta_powers(tab);
    SplitMix64 rng(0xfeed);
    for (int it = 0; it < 300; ++it) {
      auto x = static_cast<std::int32_t>(1 + rng.below(tab.size() - 1));
      auto y = static_cast<std::int32_t>(1 + rng.below(tab.size() - 1));
      std::size_t i = filtration_weight(F, x), j = filtration_weight(F, y);
      // (x-1)(y-1) - (y-1)(x-1) - ([x,y]-1)  ==  e_xy - e_yx - e_[x,y] + e_1
      FpVec v(F.n, 0);
      auto bump = [&](std::int32_t g, int sign) {
        int val = v[g] + (sign > 0 ? 1 : static_cast<int>(F.p) - 1);
        v[static_cast<std::size_t>(g)] = static_cast<std::uint8_t>(val % F.p);
      };
      bump(tab.mul(x, y), +1);
      bump(tab.mul(y, x), -1);
      bump(tab.commutator(x, y), -1);
      bump(0, +1);
      CHECK(F.member(i + j + 1, v));
    }
  }
}

TEST_CASE("squaring-chain kernel sizes separate the frozen pairs") {
  auto x_of = [](const Tuple5& t) {
    BlackBoxGroup tab = table_of(t);
    Filtration F = delta_powers(tab);
    return squaring_kernel_sizes(tab, F);
  };
  auto xq8 = x_of(Tuple5{2, 1, 1, 1, 0, 0});
  auto xd8 = x_of(Tuple5{2, 1, 1, 1, 0, 1});
  REQUIRE(!xq8.empty());
  REQUIRE(!xd8.empty());
  CHECK(xq8[0] == 1);
  CHECK(xd8[0] == 3);
  auto x16a = x_of(Tuple5{2, 1, 2, 1, 1, 0});
  auto x16b = x_of(Tuple5{2, 1, 2, 1, 1, 1});
  CHECK(x16a[0] == 1);
  CHECK(x16b[0] == 2);
  // odd characteristic is rejected
  BlackBoxGroup heis = table_of(Tuple5{3, 1, 1, 1, 1, 1});
  Filtration F3 = delta_powers(heis);
  CHECK_THROWS_AS(squaring_kernel_sizes(heis, F3), std::runtime_error);
}

TEST_CASE("squaring chain matches its closed form and ignores the lift") {
  for (const Tuple5& t : enumerate_admissible(2, 6)) {
    PGroup2 g(t);
    BlackBoxGroup tab = g.multiplication_table();
    Filtration F = delta_powers(tab);
    auto b1 = static_cast<std::int32_t>(g.index_of(g.gen_b1()));
    auto b2 = static_cast<std::int32_t>(g.index_of(g.gen_b2()));
    SplitMix64 rng(0x11c + static_cast<std::uint64_t>(t.total()));
    for (int a1 = 0; a1 < 2; ++a1)
      for (int a2 = 0; a2 < 2; ++a2) {
        FpVec u(F.n, 0);
        u[0] = static_cast<std::uint8_t>((a1 + a2) & 1);
        u[b1] ^= static_cast<std::uint8_t>(a1);
        u[b2] ^= static_cast<std::uint8_t>(a2);
        std::uint64_t target = 1;
        for (int i = 1; i <= 3; ++i) {
          target *= 2;
          u = algebra_mul(tab, 2, u, u);
          // the image has the closed form
          //   a1 (1 + b1^{2^i}) + a2 (1 + b2^{2^i}) + a1 a2 (1 + a^{2^{i-1}})
          FpVec want(F.n, 0);
          auto flip = [&](std::uint64_t idx, int on) {
            if (on) {
              want[0] ^= 1;
              want[static_cast<std::size_t>(idx)] ^= 1;
            }
          };
          flip(g.index_of(g.pow(g.gen_b1(), target)), a1);
          flip(g.index_of(g.pow(g.gen_b2(), target)), a2);
          flip(g.index_of(g.pow(g.gen_a(), target / 2)), a1 * a2);
          FpVec diff(F.n, 0);
          for (std::size_t idx = 0; idx < F.n; ++idx) diff[idx] = (u[idx] ^ want[idx]);
          CHECK(F.member(static_cast<std::size_t>(target + 1), diff));
          // two random lifts of the current class square into one class
          if (static_cast<std::size_t>(target + 1) <= F.levels.size()) {
            const EchelonBasis& lvl = F.levels[target];  // level target+1
            if (lvl.rank() > 0) {
              FpVec alt = u;
              FpVec noise = lvl.row(rng.below(lvl.rank()));
              for (std::size_t idx = 0; idx < F.n; ++idx) alt[idx] ^= noise[idx];
              FpVec squared_u = F.residue(2 * target + 1, algebra_mul(tab, 2, u, u));
              FpVec squared_alt = F.residue(2 * target + 1, algebra_mul(tab, 2, alt, alt));
              CHECK(squared_u == squared_alt);
            }
          }
          u = F.residue(static_cast<std::size_t>(target + 1), std::move(u));
        }
      }
  }
}

TEST_CASE("kernel sizes do not depend on the witness pair or on relabeling") {
  for (const Tuple5& t : enumerate_admissible(2, 5)) {
    BlackBoxGroup tab = table_of(t);
    Filtration F = delta_powers(tab);
    auto base = squaring_kernel_sizes(tab, F);
    CanonResult w = canonical_tuple_witness(tab);
    CHECK(squaring_kernel_sizes(tab, F, {w.g1, w.g2}) == base);
    BlackBoxGroup scr = random_relabel(tab, 77);
    Filtration Fs = delta_powers(scr);
    CHECK(squaring_kernel_sizes(scr, Fs) == base);
    CHECK(jennings_dims_direct(scr, Fs) == jennings_dims_direct(tab, F));
  }
}

TEST_CASE("filtration caps") {
  PGroup2 big(Tuple5{2, 1, 6, 5, 0, 0});  // order 4096
  BlackBoxGroup tab = big.multiplication_table(1 << 12);
  CHECK_THROWS_WITH_AS(delta_powers(tab), doctest::Contains("cap-exceeded"),
                       std::runtime_error);
}
