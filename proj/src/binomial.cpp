#include "hm/binomial.hpp"

#include <array>

#include "hm/errors.hpp"

namespace hm {

BigInt binomial(long n, long k) {
  if (n < 0) throw invalid_input("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; each intermediate division is exact since the
  // running product after i steps equals C(n-k+i, i) * i!-free value.
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= n - k + i;
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return out;
}

namespace {

// Pascal table for n <= 63; every entry fits in uint64 (max C(63,31) ~ 9.2e17).
struct PascalTable {
  std::array<std::array<std::uint64_t, 64>, 64> c{};
  PascalTable() {
    for (int i = 0; i < 64; ++i) {
      c[i][0] = 1;
      for (int j = 1; j <= i; ++j)
        c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
  }
};

const PascalTable& table() {
  static const PascalTable t;
  return t;
}

}  // namespace

std::uint64_t binomial_u64(int n, int k) {
  if (n < 0 || n > 63) throw invalid_input("binomial_u64: n out of range [0,63]");
  if (k < 0 || k > n) return 0;
  return table().c[n][k];
}

}  // namespace hm
