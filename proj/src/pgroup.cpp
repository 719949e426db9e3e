#include "mip/pgroup.hpp"

#include <deque>
#include <stdexcept>

#include "mip/arith.hpp"

namespace mip {

namespace {
constexpr std::uint64_t kOrderCap = std::uint64_t{1} << 22;  // brute sweeps and closures
}

PGroup2::PGroup2(const Tuple5& t) : t_(t) {
  if (!fields_valid(t)) throw std::runtime_error("invalid-tuple: p must be prime, fields >= 0");
  if (!is_constructible(t))
    throw std::runtime_error("invalid-shape: need 0 < m <= n2 <= n1 and 0 <= s_i <= m");
  if (t.total() > 40)
    throw std::runtime_error("cap-exceeded: m+n1+n2 is limited to 40");
  const auto p = static_cast<std::uint64_t>(t.p);
  pm_ = ipow_checked(p, t.m);
  pn1_ = ipow_checked(p, t.n1);
  pn2_ = ipow_checked(p, t.n2);
  // keep the whole order inside 62 bits so index arithmetic cannot wrap
  std::uint64_t limit = std::uint64_t{1} << 62;
  if (pm_ > limit / pn1_ || pm_ * pn1_ > limit / pn2_)
    throw std::runtime_error("cap-exceeded: group order does not fit the supported range");
  ps1_ = ipow_checked(p, t.s1) % pm_;
  ps2_ = ipow_checked(p, t.s2) % pm_;
}

Elem PGroup2::inv(const Elem& e) const {
  Elem r;
  r.y = (pn1_ - e.y) % pn1_;
  r.z = (pn2_ - e.z) % pn2_;
  Elem probe = mul(e, Elem{0, r.y, r.z});  // x-part is independent of r.x
  r.x = (pm_ - probe.x) % pm_;
  return r;
}

Elem PGroup2::pow(Elem e, std::uint64_t k) const {
  Elem r = identity();
  while (k) {
    if (k & 1) r = mul(r, e);
    e = mul(e, e);
    k >>= 1;
  }
  return r;
}

std::uint64_t PGroup2::elem_order(const Elem& e) const {
  const auto p = static_cast<std::uint64_t>(t_.p);
  std::uint64_t ord = 1;
  Elem f = e;
  int guard = 0;
  while (!(f == identity())) {
    f = pow(f, p);
    ord *= p;
    if (++guard > 64) throw std::runtime_error("internal: element order exceeds group bounds");
  }
  return ord;
}

std::uint64_t PGroup2::exponent() const {
  if (order() > kOrderCap)
    throw std::runtime_error("cap-exceeded: exponent sweep needs |G| <= 2^22");
  std::uint64_t e = 1;
  for (std::uint64_t i = 0; i < order(); ++i) e = std::max(e, elem_order(elem_at(i)));
  return e;
}

BlackBoxGroup PGroup2::multiplication_table(std::uint64_t cap) const {
  const std::uint64_t n = order();
  if (n > cap)
    throw std::runtime_error("cap-exceeded: multiplication table needs |G| within the cap");
  std::vector<std::int32_t> tab(static_cast<std::size_t>(n) * n);
  std::vector<Elem> elems(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) elems[i] = elem_at(i);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      tab[i * n + j] = static_cast<std::int32_t>(index_of(mul(elems[i], elems[j])));
  return BlackBoxGroup(static_cast<std::int32_t>(n), std::move(tab), false);
}

std::vector<std::uint64_t> subgroup_closure(const PGroup2& G, const std::vector<Elem>& gens) {
  if (G.order() > kOrderCap)
    throw std::runtime_error("cap-exceeded: subgroup closure needs |G| <= 2^22");
  std::vector<char> mask(static_cast<std::size_t>(G.order()), 0);
  std::deque<Elem> work;
  mask[0] = 1;
  work.push_back(G.identity());
  for (const Elem& g : gens) {
    std::uint64_t i = G.index_of(g);
    if (!mask[i]) {
      mask[i] = 1;
      work.push_back(g);
    }
  }
  while (!work.empty()) {
    Elem a = work.front();
    work.pop_front();
    for (const Elem& g : gens) {
      Elem b = G.mul(a, g);
      std::uint64_t i = G.index_of(b);
      if (!mask[i]) {
        mask[i] = 1;
        work.push_back(b);
      }
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < G.order(); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

}  // namespace mip
