#include "mip/gfp.hpp"

#include <algorithm>
#include <stdexcept>

namespace mip {

bool fp_is_zero(const FpVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t c) { return c == 0; });
}

EchelonBasis::EchelonBasis(std::int64_t p, std::size_t dim)
    : p_(p), dim_(dim), words_((dim + 63) / 64) {
  if (p < 2 || p > 251) throw std::runtime_error("invalid-prime: field characteristic out of range");
}

std::vector<std::uint64_t> EchelonBasis::pack(const FpVec& v) const {
  std::vector<std::uint64_t> w(words_, 0);
  for (std::size_t i = 0; i < dim_; ++i)
    if (v[i] & 1) w[i >> 6] |= std::uint64_t{1} << (i & 63);
  return w;
}

FpVec EchelonBasis::unpack(const std::vector<std::uint64_t>& w) const {
  FpVec v(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i)
    v[i] = static_cast<std::uint8_t>((w[i >> 6] >> (i & 63)) & 1);
  return v;
}

void EchelonBasis::reduce2(std::vector<std::uint64_t>& w) const {
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    std::size_t c = pivots_[r];
    if ((w[c >> 6] >> (c & 63)) & 1) {
      const auto& row = rows2_[r];
      for (std::size_t k = 0; k < words_; ++k) w[k] ^= row[k];
    }
  }
}

void EchelonBasis::reducep(FpVec& v) const {
  const int p = static_cast<int>(p_);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    int c = v[pivots_[r]];
    if (c == 0) continue;
    const FpVec& row = rowsp_[r];
    const int f = p - c;  // v += f * row  ==  v -= c * row
    for (std::size_t k = 0; k < dim_; ++k) {
      int t = v[k] + f * row[k];
      v[k] = static_cast<std::uint8_t>(t % p);
    }
  }
}

FpVec EchelonBasis::reduce(FpVec v) const {
  if (v.size() != dim_) throw std::runtime_error("internal: vector dimension mismatch");
  if (p_ == 2) {
    auto w = pack(v);
    reduce2(w);
    return unpack(w);
  }
  reducep(v);
  return v;
}

bool EchelonBasis::contains(const FpVec& v) const { return fp_is_zero(reduce(v)); }

bool EchelonBasis::insert(const FpVec& v) {
  if (v.size() != dim_) throw std::runtime_error("internal: vector dimension mismatch");
  if (p_ == 2) {
    auto w = pack(v);
    reduce2(w);
    std::size_t piv = dim_;
    for (std::size_t k = 0; k < words_ && piv == dim_; ++k)
      if (w[k]) piv = (k << 6) + static_cast<std::size_t>(__builtin_ctzll(w[k]));
    if (piv >= dim_) return false;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows2_.insert(rows2_.begin() + pos, std::move(w));
    return true;
  }
  FpVec w = v;
  reducep(w);
  std::size_t piv = dim_;
  for (std::size_t k = 0; k < dim_; ++k)
    if (w[k]) {
      piv = k;
      break;
    }
  if (piv >= dim_) return false;
  // scale so the leading entry is 1
  int lead = w[piv];
  int invl = 1;
  for (int c = 1; c < p_; ++c)
    if ((c * lead) % p_ == 1) {
      invl = c;
      break;
    }
  if (invl != 1)
    for (auto& c : w) c = static_cast<std::uint8_t>((c * invl) % p_);
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rowsp_.insert(rowsp_.begin() + pos, std::move(w));
  return true;
}

FpVec EchelonBasis::row(std::size_t i) const {
  if (i >= rank()) throw std::runtime_error("internal: basis row index out of range");
  return p_ == 2 ? unpack(rows2_[i]) : rowsp_[i];
}

}  // namespace mip
