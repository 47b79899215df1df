#ifndef ISOSPEC_SRC_MODP_HPP_
#define ISOSPEC_SRC_MODP_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace isospec::modp {

inline constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t reduce(unsigned __int128 x) {
  std::uint64_t lo = static_cast<std::uint64_t>(x & P);
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t r = lo + hi;
  if (r >= P) r -= P;
  if (r >= P) r -= P;
  return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return reduce(static_cast<unsigned __int128>(a) * b);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= P ? r - P : r;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }

inline std::uint64_t neg(std::uint64_t a) { return a == 0 ? 0 : P - a; }

inline std::uint64_t from_signed(std::int64_t v) {
  std::int64_t r = v % static_cast<std::int64_t>(P);
  if (r < 0) r += static_cast<std::int64_t>(P);
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a) { return pow(a, P - 2); }

// Gaussian elimination on a row-major n x m matrix.  Returns the rank and,
// for square input, writes the determinant.
inline std::size_t eliminate(std::vector<std::uint64_t>& a, std::size_t n, std::size_t m,
                             std::uint64_t* det = nullptr) {
  std::size_t rank = 0;
  std::uint64_t d = 1;
  for (std::size_t c = 0; c < m && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && a[piv * m + c] == 0) ++piv;
    if (piv == n) {
      d = 0;
      continue;
    }
    if (piv != rank) {
      for (std::size_t k = 0; k < m; ++k) std::swap(a[piv * m + k], a[rank * m + k]);
      d = neg(d);
    }
    d = mul(d, a[rank * m + c]);
    std::uint64_t pinv = inv(a[rank * m + c]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      std::uint64_t f = a[r * m + c];
      if (f == 0) continue;
      f = mul(f, pinv);
      for (std::size_t k = c; k < m; ++k) a[r * m + k] = sub(a[r * m + k], mul(f, a[rank * m + k]));
    }
    ++rank;
  }
  if (det) *det = rank == n && n == m ? d : 0;
  return rank;
}

}  // namespace isospec::modp

#endif  // ISOSPEC_SRC_MODP_HPP_
