#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bcube {

// Bit i of a mask is coordinate i (zero-based); the 1-based coordinate i+1 in prose.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Scatter the low bits of `packed` into the positions of `where`, in increasing order.
inline Mask deposit_bits(Mask packed, Mask where) {
  Mask out = 0;
  for (Mask bit = 1; where != 0; bit <<= 1) {
    Mask low = where & (~where + 1);
    if (packed & bit) out |= low;
    where &= where - 1;
  }
  return out;
}

// Inverse of deposit_bits: gather the bits of `x` at `where` into the low bits.
inline Mask extract_bits(Mask x, Mask where) {
  Mask out = 0;
  for (Mask bit = 1; where != 0; bit <<= 1) {
    Mask low = where & (~where + 1);
    if (x & low) out |= bit;
    where &= where - 1;
  }
  return out;
}

// Every submask of `m`, including 0 and m itself, in decreasing order.
template <class F>
void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

// All masks over n bits with exactly k bits set, increasing.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    f(static_cast<Mask>(s));
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

inline std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask indices_to_mask(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= Mask{1} << i;
  return m;
}

double binomial(int n, int k);

}  // namespace bcube
