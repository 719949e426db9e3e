#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mip/algebra.hpp"
#include "mip/blackbox.hpp"
#include "mip/params.hpp"

namespace mip {

// Isomorphism-invariant data: order and abelianization exponents, exponent of
// the group, the dimension quotients d_k, and (p = 2) the squaring-chain
// kernel sizes.  d and x are stored trimmed: d without trailing zeros, x up
// to and including the first saturated entry, so equal invariant sequences
// compare equal as vectors.
struct Fingerprint {
  std::int64_t p = 2;
  int order_exp = 0;
  std::pair<int, int> ab = {0, 0};
  int exp_exp = 0;
  std::vector<int> d;
  std::vector<int> x;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintOptions {
  bool formula_only = false;      // always take the closed-form d path
  bool drop_x = false;            // omit kernel sizes at p = 2
  std::uint64_t x_order_cap = 512;       // direct squaring-chain bound
  std::uint64_t direct_d_cap_p2 = 512;   // filtration-backed d below these,
  std::uint64_t direct_d_cap_odd = 243;  // closed-form chain above
  std::uint64_t table_cap = 4096;
  AlgebraOptions algebra;
};

Fingerprint fingerprint(const Tuple5& t, const FingerprintOptions& opt = {});
Fingerprint fingerprint_from_table(const BlackBoxGroup& G, const FingerprintOptions& opt = {});

// First index (i >= 0) where the d-vector drops below the generic value:
// d_i == 0 for odd p, d_i < 3 for p = 2.
int u_from_d(std::int64_t p, const std::vector<int>& d);

// (computed u, predicted u): s2 for odd p, min(n2-1, s1, s2) for p = 2.
std::pair<int, int> u_invariant(const Tuple5& t);

struct TupleRecord {
  Tuple5 t;
  Fingerprint fp;
  int u = 0;
  int u_predicted = 0;
};

struct SeparationRecord {
  int m = 0, n1 = 0, n2 = 0, s1 = 0;
  int s2_a = 0, s2_b = 0;
  std::string component;  // first differing fingerprint component, or "none"
};

struct VerifyOptions {
  FingerprintOptions fp;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct VerifyReport {
  std::vector<TupleRecord> records;
  std::vector<std::pair<std::size_t, std::size_t>> collisions;  // record indices
  std::vector<SeparationRecord> separations;
  int u_failures = 0;
};

// Fingerprints every admissible tuple up to max_total and reports collisions
// between distinct tuples, u-claim failures, and which component separates
// each pair within a fixed (m, n1, n2, s1) class.
VerifyReport verify_injectivity(std::int64_t p, int max_total, const VerifyOptions& opt = {});

// Name of the first fingerprint component where a and b differ, checked in
// the order: order, abelianization, exponent, d, x.  "none" if equal.
std::string first_difference(const Fingerprint& a, const Fingerprint& b);

}  // namespace mip
