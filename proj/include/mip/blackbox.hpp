#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mip {

// A subgroup as a sorted index set plus a membership bitmap.
struct IndexSet {
  std::vector<std::int32_t> elems;  // ascending
  std::vector<char> mask;           // mask[g] != 0 iff g in the set
  std::size_t size() const { return elems.size(); }
  bool contains(std::int32_t g) const { return mask[static_cast<std::size_t>(g)] != 0; }
};

// A finite group given by its full multiplication table.  The identity is
// element 0; rows are left factors: at(g, h) = g*h.
class BlackBoxGroup {
 public:
  BlackBoxGroup(std::int32_t n, std::vector<std::int32_t> table, bool validate = true);

  std::int32_t size() const { return n_; }
  std::int32_t mul(std::int32_t a, std::int32_t b) const {
    return tab_[static_cast<std::size_t>(a) * n_ + b];
  }
  std::int32_t inv(std::int32_t a) const { return inv_[static_cast<std::size_t>(a)]; }
  std::int32_t commutator(std::int32_t a, std::int32_t b) const {  // a^-1 b^-1 a b
    return mul(mul(mul(inv(a), inv(b)), a), b);
  }
  std::int32_t pow(std::int32_t a, std::uint64_t e) const;
  const std::vector<std::int32_t>& raw() const { return tab_; }

  static BlackBoxGroup load(std::istream& in);
  static BlackBoxGroup load_file(const std::string& path);
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;

 private:
  std::int32_t n_;
  std::vector<std::int32_t> tab_;
  std::vector<std::int32_t> inv_;

  void check_structure() const;
  void build_inverses();
};

std::uint64_t element_order(const BlackBoxGroup& G, std::int32_t g);
std::uint64_t group_exponent(const BlackBoxGroup& G);

// Unique prime p with |G| a power of p; throws "not-a-p-group" otherwise.
std::int64_t group_prime(const BlackBoxGroup& G);

IndexSet subgroup_generated(const BlackBoxGroup& G, const std::vector<std::int32_t>& gens);
IndexSet derived_subgroup(const BlackBoxGroup& G);
IndexSet center(const BlackBoxGroup& G);
IndexSet frattini_subgroup(const BlackBoxGroup& G);  // G' G^p for p-groups
bool is_abelian(const BlackBoxGroup& G);
bool nilpotency_class_le2(const BlackBoxGroup& G);

struct Quotient {
  BlackBoxGroup group;
  std::vector<std::int32_t> proj;  // element -> coset index (coset of id is 0)
  std::vector<std::int32_t> reps;  // coset index -> least representative
};
// Throws "not-normal" when N is not normal in G.
Quotient quotient(const BlackBoxGroup& G, const IndexSet& N);

// Burnside basis count: rank of G/(G' G^p).  Requires a p-group.
int min_generators(const BlackBoxGroup& G);

// Invariant factors of an abelian p-group as exponents of p, descending;
// greedy peeling of maximal-order cyclic summands.
std::vector<int> abelian_type(const BlackBoxGroup& G);

// Short generating sequence; minimal for p-groups (grown through the
// Frattini quotient), plain greedy otherwise.
std::vector<std::int32_t> generating_set(const BlackBoxGroup& G);

// Conjugate the table by a permutation with perm[0] == 0.
BlackBoxGroup relabel_with(const BlackBoxGroup& G, const std::vector<std::int32_t>& perm);
// Conjugate by a seed-determined random permutation fixing the identity.
BlackBoxGroup random_relabel(const BlackBoxGroup& G, std::uint64_t seed);

}  // namespace mip
