#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mip/blackbox.hpp"
#include "mip/params.hpp"

namespace mip {

// Normal form a^x b1^y b2^z with 0 <= x < p^m, 0 <= y < p^n1, 0 <= z < p^n2.
struct Elem {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t z = 0;
  friend bool operator==(const Elem&, const Elem&) = default;
};

// The two-generator class-2 group determined by a constructible tuple.
//
// Multiplication collects b2^z1 past b1^y2, which contributes a^{y2*z1}, and
// folds the wraps of the b1/b2 exponents back into a via a^{p^{s_i}}; the sum
// of these three 2-cocycles realizes b_i^{p^{n_i}} = a^{p^{s_i}} on the
// normal-form carrier, so the presentation relations all hold and the order
// matches, which pins the isomorphism type.
class PGroup2 {
 public:
  explicit PGroup2(const Tuple5& t);

  const Tuple5& tuple() const { return t_; }
  std::uint64_t order() const { return pm_ * pn1_ * pn2_; }
  std::uint64_t mod_a() const { return pm_; }
  std::uint64_t mod_b1() const { return pn1_; }
  std::uint64_t mod_b2() const { return pn2_; }

  Elem identity() const { return {}; }
  Elem gen_a() const { return {1 % pm_, 0, 0}; }
  Elem gen_b1() const { return {0, 1, 0}; }
  Elem gen_b2() const { return {0, 0, 1}; }

  Elem mul(const Elem& e1, const Elem& e2) const {
    std::uint64_t y = e1.y + e2.y;
    std::uint64_t z = e1.z + e2.z;
    std::uint64_t x = e1.x + e2.x + (e2.y % pm_) * (e1.z % pm_);
    if (y >= pn1_) { y -= pn1_; x += ps1_; }
    if (z >= pn2_) { z -= pn2_; x += ps2_; }
    return {x % pm_, y, z};
  }
  Elem inv(const Elem& e) const;
  Elem pow(Elem e, std::uint64_t k) const;
  Elem commutator(const Elem& g, const Elem& h) const {  // g^-1 h^-1 g h
    return mul(mul(mul(inv(g), inv(h)), g), h);
  }

  std::uint64_t elem_order(const Elem& e) const;      // least p-power killing e
  std::uint64_t exponent() const;                     // brute max of element orders
  std::uint64_t derived_order() const { return pm_; }
  std::pair<int, int> abelianization_type() const { return {t_.n1, t_.n2}; }

  // (x, y, z) lexicographic enumeration; identity is index 0.
  std::uint64_t index_of(const Elem& e) const { return (e.x * pn1_ + e.y) * pn2_ + e.z; }
  Elem elem_at(std::uint64_t idx) const {
    Elem e;
    e.z = idx % pn2_;
    idx /= pn2_;
    e.y = idx % pn1_;
    e.x = idx / pn1_;
    return e;
  }

  BlackBoxGroup multiplication_table(std::uint64_t cap = 4096) const;

 private:
  Tuple5 t_;
  std::uint64_t pm_, pn1_, pn2_;  // moduli p^m, p^n1, p^n2
  std::uint64_t ps1_, ps2_;       // p^{s_i} reduced mod p^m
};

// Closure of the given elements under multiplication, as sorted indices.
std::vector<std::uint64_t> subgroup_closure(const PGroup2& G, const std::vector<Elem>& gens);

}  // namespace mip
