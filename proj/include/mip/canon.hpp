#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mip/blackbox.hpp"
#include "mip/params.hpp"

namespace mip {

// A pair of elements whose images in G/G' split it as a direct product of
// cyclic factors of orders p^n1, p^n2; o1, o2 are the element orders in G.
struct GPair {
  std::int32_t g1 = 0;
  std::int32_t g2 = 0;
  std::uint64_t o1 = 1;
  std::uint64_t o2 = 1;
};

// Checks that G is a nonabelian p-group of class <= 2 on two generators and
// returns p; throws "not-a-p-group" / "class-too-large" / "not-2-generated" /
// "abelian-input" otherwise.
std::int64_t validate_family(const BlackBoxGroup& G);

void for_each_gpair(const BlackBoxGroup& G, const std::function<void(const GPair&)>& fn);
std::vector<GPair> gpairs(const BlackBoxGroup& G);

struct CanonResult {
  Tuple5 tuple;
  std::int32_t g1 = 0;  // first witness pair attaining the maximal orders
  std::int32_t g2 = 0;
};

// The unique admissible tuple of G: p^m = |G'|, (n1, n2) the type of G/G',
// and (p^{m+n1-s1}, p^{m+n2-s2}) the lexicographic maximum of (|g1|, |g2|)
// over the generating pairs above.  When n1 == n2 both orientations of a
// pair occur in the scan.
CanonResult canonical_tuple_witness(const BlackBoxGroup& G);
Tuple5 canonical_tuple(const BlackBoxGroup& G);

// True iff some pair of H satisfies every defining relation of the tuple's
// presentation and generates H; with |H| = p^{m+n1+n2} that certifies an
// isomorphism.  Order mismatch yields false, not an error.
bool relations_isomorphic(const BlackBoxGroup& H, const Tuple5& t);

// Independent oracle: backtracking search for an isomorphism mapping a
// generating sequence of G to order-compatible images in H.
bool brute_isomorphic(const BlackBoxGroup& G, const BlackBoxGroup& H,
                      std::int32_t order_cap = 512);

}  // namespace mip
