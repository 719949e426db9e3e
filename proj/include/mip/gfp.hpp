#pragma once

#include <cstdint>
#include <vector>

namespace mip {

// Coefficient vector over F_p, entries in [0, p).
using FpVec = std::vector<std::uint8_t>;

bool fp_is_zero(const FpVec& v);

// Incrementally maintained echelon basis of a subspace of F_p^dim.
// Rows keep their leading entry as pivot (entries left of a pivot are zero),
// pivots are pairwise distinct and scanned in ascending order, so reduce()
// returns the unique coset representative with all pivot columns cleared.
// Rows are bit-packed for p = 2 and byte vectors otherwise.
class EchelonBasis {
 public:
  EchelonBasis(std::int64_t p, std::size_t dim);

  bool insert(const FpVec& v);  // true if the rank grew
  bool contains(const FpVec& v) const;
  FpVec reduce(FpVec v) const;
  FpVec row(std::size_t i) const;  // i-th basis row (ascending pivots)

  std::size_t rank() const { return pivots_.size(); }
  std::size_t dim() const { return dim_; }
  std::int64_t p() const { return p_; }

 private:
  std::int64_t p_;
  std::size_t dim_;
  std::size_t words_;  // packed row width for p == 2
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint64_t>> rows2_;
  std::vector<FpVec> rowsp_;

  std::vector<std::uint64_t> pack(const FpVec& v) const;
  FpVec unpack(const std::vector<std::uint64_t>& w) const;
  void reduce2(std::vector<std::uint64_t>& w) const;
  void reducep(FpVec& v) const;
};

}  // namespace mip
