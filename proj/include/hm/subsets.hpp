#ifndef HM_SUBSETS_HPP
#define HM_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "hm/binomial.hpp"
#include "hm/errors.hpp"

namespace hm {

/// Vertex subsets of {0..n-1} as bitmasks; the library-wide vertex cap.
using VertexMask = std::uint64_t;
inline constexpr int kMaxVertices = 63;

inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest_vertex(VertexMask m) { return std::countr_zero(m); }
inline VertexMask vertex_bit(int v) { return VertexMask{1} << v; }
inline VertexMask full_mask(int n) { return n == 0 ? 0 : (~VertexMask{0} >> (64 - n)); }

inline std::vector<int> mask_vertices(VertexMask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// k-subsets are enumerated in colex order: S < T iff the largest element of
// the symmetric difference lies in T. On bitmasks this is plain numeric order,
// so Gosper's hack walks the whole sequence.

/// Smallest k-subset in colex order ({0..k-1}).
inline VertexMask first_ksubset(int k) { return k == 0 ? 0 : full_mask(k); }

/// Successor of `m` among k-subsets of {0..n-1}; 0 when `m` is the last one.
inline VertexMask next_ksubset(VertexMask m, int n) {
  if (m == 0) return 0;
  VertexMask c = m & -m;
  VertexMask r = m + c;
  VertexMask next = (((r ^ m) >> 2) / c) | r;
  return (next & ~full_mask(n)) ? 0 : next;
}

template <typename Fn>
void for_each_ksubset(int n, int k, Fn&& fn) {
  if (n < 0 || n > kMaxVertices || k < 0 || k > n)
    throw invalid_input("for_each_ksubset: need 0 <= k <= n <= 63");
  if (k == 0) {
    fn(VertexMask{0});
    return;
  }
  for (VertexMask m = first_ksubset(k); m != 0; m = next_ksubset(m, n)) fn(m);
}

/// Colex rank: rank(S) = sum_i C(s_i, i+1) over the sorted elements s_0 < s_1 < ...
inline std::uint64_t rank_colex(VertexMask m) {
  std::uint64_t r = 0;
  int i = 1;
  while (m) {
    r += binomial_u64(std::countr_zero(m), i++);
    m &= m - 1;
  }
  return r;
}

/// Inverse of rank_colex for k-subsets (elements must fit under the 63-vertex cap).
inline VertexMask unrank_colex(std::uint64_t r, int k) {
  VertexMask m = 0;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 <= kMaxVertices && binomial_u64(c + 1, i) <= r) ++c;
    r -= binomial_u64(c, i);
    m |= vertex_bit(c);
  }
  return m;
}

}  // namespace hm

#endif  // HM_SUBSETS_HPP
