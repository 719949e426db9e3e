#include "mip/params.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

#include "mip/arith.hpp"

namespace mip {

bool tuple_less(const Tuple5& a, const Tuple5& b) {
  return std::make_tuple(a.p, a.total(), a.m, a.n1, a.n2, a.s1, a.s2) <
         std::make_tuple(b.p, b.total(), b.m, b.n1, b.n2, b.s1, b.s2);
}

std::string to_csv(const Tuple5& t) {
  std::ostringstream os;
  os << t.p << ',' << t.m << ',' << t.n1 << ',' << t.n2 << ',' << t.s1 << ',' << t.s2;
  return os.str();
}

Tuple5 tuple_from_csv(std::int64_t p, const std::string& fields) {
  std::istringstream is(fields);
  int vals[5];
  char sep = ',';
  for (int i = 0; i < 5; ++i) {
    if (i > 0 && !(is >> sep && sep == ','))
      throw std::runtime_error("invalid-tuple: expected m,n1,n2,s1,s2");
    if (!(is >> vals[i]))
      throw std::runtime_error("invalid-tuple: expected m,n1,n2,s1,s2");
  }
  std::string rest;
  if (is >> rest) throw std::runtime_error("invalid-tuple: trailing input after five fields");
  return Tuple5{p, vals[0], vals[1], vals[2], vals[3], vals[4]};
}

bool fields_valid(const Tuple5& t) {
  return is_prime(t.p) && t.m >= 0 && t.n1 >= 0 && t.n2 >= 0 && t.s1 >= 0 && t.s2 >= 0;
}

bool is_constructible(const Tuple5& t) {
  return fields_valid(t) && 0 < t.m && t.m <= t.n2 && t.n2 <= t.n1 && t.s1 <= t.m &&
         t.s2 <= t.m;
}

bool is_admissible(const Tuple5& t) {
  if (!fields_valid(t)) return false;
  if (!(0 < t.m && t.s1 <= t.m && t.s2 <= t.m && t.m <= t.n2 && t.n2 <= t.n1)) return false;
  if (t.n1 - t.s1 < t.n2 - t.s2) return false;  // |b1| must dominate |b2|
  if (t.p == 2 && t.s1 >= t.n1) return false;
  if (t.s1 >= t.s2) return true;
  // the one family with s1 < s2, only at p = 2
  return t.p == 2 && t.n1 == t.n2 && t.n2 == t.m && t.m == t.s2 && t.s2 == t.s1 + 1;
}

namespace {

template <typename Pred>
std::vector<Tuple5> sweep(std::int64_t p, int max_total, Pred keep) {
  if (!is_prime(p)) throw std::runtime_error("invalid-prime: p must be a prime");
  std::vector<Tuple5> out;
  for (int total = 3; total <= max_total; ++total)
    for (int m = 1; m <= total - 2; ++m)
      for (int n1 = m; n1 <= total - m - 1; ++n1) {
        int n2 = total - m - n1;
        if (n2 < m || n2 > n1) continue;
        for (int s1 = 0; s1 <= m; ++s1)
          for (int s2 = 0; s2 <= m; ++s2) {
            Tuple5 t{p, m, n1, n2, s1, s2};
            if (keep(t)) out.push_back(t);
          }
      }
  return out;
}

}  // namespace

std::vector<Tuple5> enumerate_admissible(std::int64_t p, int max_total) {
  return sweep(p, max_total, [](const Tuple5& t) { return is_admissible(t); });
}

std::vector<Tuple5> enumerate_constructible(std::int64_t p, int max_total) {
  return sweep(p, max_total, [](const Tuple5& t) { return is_constructible(t); });
}

std::vector<std::pair<int, int>> region(std::int64_t p, int m, int n1, int n2) {
  if (!is_prime(p)) throw std::runtime_error("invalid-prime: p must be a prime");
  if (!(0 < m && m <= n2 && n2 <= n1))
    throw std::runtime_error("invalid-shape: need 0 < m <= n2 <= n1");
  std::vector<std::pair<int, int>> out;
  for (int s1 = 0; s1 <= m; ++s1)
    for (int s2 = 0; s2 <= m; ++s2)
      if (is_admissible(Tuple5{p, m, n1, n2, s1, s2})) out.emplace_back(s1, s2);
  return out;
}

}  // namespace mip
