#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mip {

// Classification parameters (p; m, n1, n2, s1, s2).  m, n1, n2 are the
// exponents of |G'| and of the two cyclic factors of G/G'; s1, s2 locate the
// generator powers inside G'.
struct Tuple5 {
  std::int64_t p = 2;
  int m = 0;
  int n1 = 0;
  int n2 = 0;
  int s1 = 0;
  int s2 = 0;

  friend bool operator==(const Tuple5&, const Tuple5&) = default;
  int total() const { return m + n1 + n2; }
};

// Enumeration order: (m+n1+n2, m, n1, n2, s1, s2), p first as a tie guard.
bool tuple_less(const Tuple5& a, const Tuple5& b);

std::string to_csv(const Tuple5& t);                               // "p,m,n1,n2,s1,s2"
Tuple5 tuple_from_csv(std::int64_t p, const std::string& fields);  // "m,n1,n2,s1,s2"

bool fields_valid(const Tuple5& t);     // p prime, all entries >= 0
bool is_constructible(const Tuple5& t); // 0 < m <= n2 <= n1 and 0 <= s_i <= m
bool is_admissible(const Tuple5& t);    // canonical-parameter predicate; total, pure

// All admissible tuples with m+n1+n2 <= max_total, sorted by tuple_less.
std::vector<Tuple5> enumerate_admissible(std::int64_t p, int max_total);

// Same sweep without the admissibility filter (every constructible tuple).
std::vector<Tuple5> enumerate_constructible(std::int64_t p, int max_total);

// Admissible (s1, s2) pairs over a fixed shape; throws "invalid-shape" unless
// 0 < m <= n2 <= n1.
std::vector<std::pair<int, int>> region(std::int64_t p, int m, int n1, int n2);

}  // namespace mip
