#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dca {

/// Multi-indices over up to 8 coordinates, packed 8 bits per entry.
/// Entry j (0-based) lives at bits [8j, 8j+8); exponents must stay < 256.
namespace mi {

constexpr int kMaxDim = 8;

inline std::uint32_t get(std::uint64_t x, int j) {
  return static_cast<std::uint32_t>((x >> (8 * j)) & 0xffu);
}

inline std::uint64_t with(std::uint64_t x, int j, std::uint32_t e) {
  if (e > 0xff) throw std::overflow_error("multi-index exponent overflow");
  return (x & ~(0xffull << (8 * j))) | (static_cast<std::uint64_t>(e) << (8 * j));
}

inline std::uint64_t inc(std::uint64_t x, int j) { return with(x, j, get(x, j) + 1); }
inline std::uint64_t dec(std::uint64_t x, int j) { return with(x, j, get(x, j) - 1); }

inline int degree(std::uint64_t x) {
  int d = 0;
  while (x) {
    d += static_cast<int>(x & 0xffu);
    x >>= 8;
  }
  return d;
}

/// Parity of the exponent sum strictly above slot j.
inline bool parity_above(std::uint64_t x, int j) {
  const std::uint64_t high = j + 1 >= kMaxDim ? 0 : (x >> (8 * (j + 1)));
  return (static_cast<unsigned>(__builtin_popcountll(high & 0x0101010101010101ull)) & 1u) != 0;
}

/// Parity of the exponent sum strictly below slot j.
inline bool parity_below(std::uint64_t x, int j) {
  const std::uint64_t low = j == 0 ? 0 : (x & ((1ull << (8 * j)) - 1));
  return (static_cast<unsigned>(__builtin_popcountll(low & 0x0101010101010101ull)) & 1u) != 0;
}

inline std::uint64_t pack(const std::vector<std::uint32_t>& v) {
  if (v.size() > kMaxDim) throw std::invalid_argument("dimension exceeds 8");
  std::uint64_t x = 0;
  for (int j = 0; j < static_cast<int>(v.size()); ++j) x = with(x, j, v[j]);
  return x;
}

inline std::vector<std::uint32_t> unpack(std::uint64_t x, int m) {
  std::vector<std::uint32_t> v(m);
  for (int j = 0; j < m; ++j) v[j] = get(x, j);
  return v;
}

/// All multi-indices of the given total degree, in lexicographic order.
std::vector<std::uint64_t> of_degree(int m, int k);

}  // namespace mi
}  // namespace dca
