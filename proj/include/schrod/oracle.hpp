#pragma once

// Combinatorial oracle: the Freyd-Yetter action of B_n on G^n,
//   sigma_i (.., g_i, g_{i+1}, ..) = (.., g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}, ..),
// and its fixed-point counts. Plain enumeration only.

#include <cstdint>
#include <string>
#include <vector>

#include "schrod/braid.hpp"
#include "schrod/zoo.hpp"

namespace schrod {

inline constexpr uint64_t kOracleTupleLimit = 10'000'000;

inline std::vector<uint32_t> fy_apply(const FiniteGroup& G, const BraidWord& b, std::vector<uint32_t> t) {
  if (t.size() != b.strands)
    fail(ErrorKind::LengthMismatch, "tuple of length " + std::to_string(t.size()) + " for a braid on " +
                                        std::to_string(b.strands) + " strands");
  check_letters(b);
  for (int l : b.letters) {
    size_t i = static_cast<size_t>(std::abs(l)) - 1;
    uint32_t x = t[i], y = t[i + 1];
    if (l > 0) {
      t[i] = y;
      t[i + 1] = G.mul(G.mul(G.inv(y), x), y);
    } else {
      t[i] = G.mul(G.mul(x, y), G.inv(x));
      t[i + 1] = x;
    }
  }
  return t;
}

inline uint64_t fy_fixed_points(const FiniteGroup& G, const BraidWord& b) {
  uint64_t total = 1;
  for (size_t k = 0; k < b.strands; ++k) {
    total *= G.order;
    if (total > kOracleTupleLimit)
      fail(ErrorKind::EnumerationTooLarge, "|" + G.name + "|^" + std::to_string(b.strands) + " exceeds " +
                                               std::to_string(kOracleTupleLimit) + " tuples");
  }
  check_letters(b);
  uint64_t fixed = 0;
  std::vector<uint32_t> t(b.strands, 0);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t r = idx;
    for (size_t k = b.strands; k-- > 0;) {
      t[k] = static_cast<uint32_t>(r % G.order);
      r /= G.order;
    }
    if (fy_apply(G, b, t) == t) ++fixed;
  }
  return fixed;
}

inline uint64_t conjugacy_class_count(const FiniteGroup& G) {
  std::vector<bool> seen(G.order, false);
  uint64_t classes = 0;
  for (uint32_t g = 0; g < G.order; ++g) {
    if (seen[g]) continue;
    ++classes;
    for (uint32_t h = 0; h < G.order; ++h) seen[G.mul(G.mul(h, g), G.inv(h))] = true;
  }
  return classes;
}

inline uint64_t commuting_pair_count(const FiniteGroup& G) {
  uint64_t n = 0;
  for (uint32_t a = 0; a < G.order; ++a)
    for (uint32_t b = 0; b < G.order; ++b)
      if (G.mul(a, b) == G.mul(b, a)) ++n;
  return n;
}

}  // namespace schrod
